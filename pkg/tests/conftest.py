import random

from tdcyclic import BiPoly, RingShape


def random_generator_arrays(rng: random.Random, shape: RingShape, max_gens: int = 2):
    """Random ideal presentations mixing sparse arrays, rank-one products
    of an x-polynomial and a y-polynomial, and dense arrays."""
    q = shape.field.q
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        style = rng.random()
        if style < 0.45:
            arr = [[rng.randrange(q) if rng.random() < 0.5 else 0
                    for _ in range(shape.ell)] for _ in range(shape.s)]
        elif style < 0.85:
            a = [rng.randrange(q) for _ in range(shape.s)]
            b = [rng.randrange(q) for _ in range(shape.ell)]
            arr = [[shape.field.mul(ai, bj) for bj in b] for ai in a]
        else:
            arr = [[rng.randrange(q) for _ in range(shape.ell)] for _ in range(shape.s)]
        gens.append(arr)
    return gens


def random_generators(rng: random.Random, shape: RingShape, max_gens: int = 2):
    return [BiPoly(shape, arr) for arr in random_generator_arrays(rng, shape, max_gens)]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    reports = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance" in rep.nodeid and getattr(rep, "when", None) == "call":
                reports.append(rep)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::")[-1]
        extra = ""
        for pname, pval in getattr(rep, "user_properties", []):
            extra += f"  [{pname}={pval}]"
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}{extra}")
