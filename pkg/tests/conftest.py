import string

from hypothesis import strategies as st

from wh2dl import dl

_NAMES = st.builds(
    lambda first, rest: first + rest,
    st.sampled_from(string.ascii_uppercase),
    st.text(alphabet=string.ascii_lowercase + "_0123456789", min_size=0,
            max_size=8),
).filter(lambda n: n not in ("Integer", "Count", "Thing"))

_ROLE_NAMES = st.builds(
    lambda first, rest: first + rest,
    st.sampled_from(string.ascii_lowercase),
    st.text(alphabet=string.ascii_lowercase + "_", min_size=0, max_size=8),
).filter(lambda n: n not in ("and", "or", "some", "inv", "max", "min",
                             "sometimes", "always"))

roles = st.one_of(
    st.builds(dl.AtomicRole, _ROLE_NAMES),
    st.builds(dl.TemporalRole, st.sampled_from(["sometimes", "always"]),
              _ROLE_NAMES),
    st.builds(dl.Inverse, st.builds(dl.AtomicRole, _ROLE_NAMES)),
    st.builds(dl.Inverse, st.builds(
        dl.TemporalRole, st.sampled_from(["sometimes", "always"]),
        _ROLE_NAMES)),
)

_LEAVES = st.one_of(
    st.builds(dl.Atomic, _NAMES),
    st.builds(dl.Nominal, _NAMES),
    st.just(dl.IntegerType()),
    st.just(dl.CountConcept()),
    st.just(dl.Thing()),
)


def _extend(children):
    return st.one_of(
        st.builds(lambda parts: dl.Intersection(tuple(parts)),
                  st.lists(children, min_size=2, max_size=4)),
        st.builds(lambda parts: dl.Union(tuple(parts)),
                  st.lists(children, min_size=2, max_size=4)),
        st.builds(dl.Exists, roles, children),
    )


# depth <= 6 concept expressions inside the fragment
concepts = st.recursive(_LEAVES, _extend, max_leaves=24)

axioms = st.one_of(
    st.builds(dl.Subsumption, concepts, concepts),
    st.builds(dl.Definition, _NAMES, concepts,
              st.sampled_from([None, "max", "min"])),
    st.builds(dl.Disjointness, concepts, concepts),
    st.builds(dl.RoleSubsumption, _ROLE_NAMES, _ROLE_NAMES),
)
