from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def rationals(max_num: int = 20, max_den: int = 6, nonzero: bool = False):
    num = st.integers(-max_num, max_num)
    if nonzero:
        num = num.filter(bool)
    return st.builds(Fraction, num, st.integers(1, max_den))
