from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
