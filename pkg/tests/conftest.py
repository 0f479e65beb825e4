import pytest

import geomnerve as gn


@pytest.fixture(scope="session")
def groups():
    return {
        "z1": gn.trivial_group(),
        "z2": gn.cyclic_group(2),
        "z3": gn.cyclic_group(3),
        "s3": gn.symmetric_group(3),
    }


@pytest.fixture(scope="session")
def cats(groups):
    return {
        "terminal": gn.terminal_category(),
        "poset1": gn.poset_category(1),
        "poset2": gn.poset_category(2),
        "bz2": gn.group_as_groupoid(groups["z2"]),
        "bz3": gn.group_as_groupoid(groups["z3"]),
    }


@pytest.fixture(scope="session")
def families(groups):
    return {
        "z2": gn.GroupFamily(base=("*",), groups={"*": groups["z2"]}),
        "z3": gn.GroupFamily(base=("*",), groups={"*": groups["z3"]}),
        "z1": gn.GroupFamily(base=("*",), groups={"*": groups["z1"]}),
    }


@pytest.fixture(scope="session")
def corpus(cats, families):
    """The standing corpus of validated 2-categories used across the suite."""
    return {
        "terminal": gn.delta_two_category(0),
        "delta0": gn.delta_two_category(0),
        "delta1": gn.delta_two_category(1),
        "delta2": gn.delta_two_category(2),
        "delta3": gn.delta_two_category(3),
        "bz2": gn.from_category(cats["bz2"]),
        "bz3": gn.from_category(cats["bz3"]),
        "poset1": gn.from_category(cats["poset1"]),
        "poset2": gn.from_category(cats["poset2"]),
        "autz2": gn.automorphism_two_groupoid(families["z2"]),
        "autz3": gn.automorphism_two_groupoid(families["z3"]),
    }


@pytest.fixture(scope="session")
def nerves(corpus):
    return {name: gn.nerve_of_two_category(C) for name, C in corpus.items()}
