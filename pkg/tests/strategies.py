"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from ssla4 import icosian
from ssla4.golden import GoldenInt, KScalar
from ssla4.quatk import Quat

small = st.integers(-30, 30)
golden_ints = st.builds(GoldenInt, small, small)
nonzero_golden = golden_ints.filter(lambda x: x.a or x.b)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
kscalars = st.builds(KScalar.make, fractions, fractions)
quats = st.builds(Quat, kscalars, kscalars, kscalars, kscalars)
icosians = st.lists(st.integers(-4, 4), min_size=8, max_size=8).map(icosian.Icosian.from_ints)
nonzero_icosians = icosians.filter(lambda p: any(p.ints()))
positive_fractions = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)
