"""Hypothesis strategies for small graphs and LRBs."""
import itertools

from hypothesis import strategies as st

from lrbhom.corpus import word_closure
from lrbhom.monoid import Graph, fpc_lrb, free_lrb, sign_closure


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


sign_vectors = st.integers(1, 4).flatmap(lambda n: st.lists(
    st.text(alphabet="0+-", min_size=n, max_size=n), min_size=1, max_size=4))

words = st.lists(st.text(alphabet="abc", min_size=1, max_size=3).map(
    lambda w: "".join(dict.fromkeys(w))), min_size=1, max_size=3)

lrbs = st.one_of(
    st.integers(0, 3).map(free_lrb),
    graphs(max_n=4).map(fpc_lrb),
    sign_vectors.map(sign_closure),
    words.map(word_closure),
)
