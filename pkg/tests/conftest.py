import pytest

from dvdbinom import make_model

# (kind, p, d, modulus) for every residue field exercised by the acceptance runs
FIELDS = [
    ("zp", 2, 1, None),
    ("zp", 3, 1, None),
    ("zp", 5, 1, None),
    ("fqt", 2, 1, None),
    ("fqt", 3, 1, None),
    ("fqt", 2, 2, [1, 1, 1]),
]
REP_SEEDS = [None, 1, 2, 3, 0xDEADBEEF, 2**64 - 1]


def alternate_root(kind, p, d, modulus):
    """Largest primitive root, used as the second choice when q > 3."""
    field = make_model(kind, p, d, modulus).field
    return max(field.primitive_roots)


def all_configs():
    """Every (label, model) pair in the acceptance grid."""
    out = []
    for kind, p, d, modulus in FIELDS:
        q = p**d
        roots = [None] + ([alternate_root(kind, p, d, modulus)] if q > 3 else [])
        for seed in REP_SEEDS:
            for root in roots:
                label = f"{kind}-q{q}-seed{seed}-root{root}"
                out.append((label, make_model(kind, p, d, modulus, seed=seed,
                                              primitive_root=root)))
    return out


@pytest.fixture(scope="session")
def configs():
    return all_configs()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
