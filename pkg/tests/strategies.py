"""Hypothesis strategies shared by the test modules."""
import numpy as np
from hypothesis import strategies as st

from qbethe.params import ModelParams

# zero, or bounded away from zero so that q^{-N} stays representable
coupling = st.one_of(
    st.just(0.0),
    st.floats(min_value=-0.9, max_value=-0.01),
    st.floats(min_value=0.01, max_value=0.9),
)
strict_coupling = st.one_of(
    st.floats(min_value=-0.85, max_value=-0.15),
    st.floats(min_value=0.15, max_value=0.85),
)


@st.composite
def model_params(draw, strict=False):
    c = strict_coupling if strict else coupling
    vals = [draw(c) for _ in range(5)]
    if strict:
        # keep hat tau off the unit circle: |a| != |â| on each side
        for i, k in ((1, 2), (3, 4)):
            if abs(abs(vals[i]) - abs(vals[k])) < 0.02:
                vals[k] = float(np.sign(vals[k]) * (abs(vals[k]) - 0.05 if abs(vals[k]) > 0.5 else abs(vals[k]) + 0.05))
    return ModelParams(*vals)
