import pytest
from hypothesis import given
from hypothesis import strategies as st

from channel_coherence import units
from channel_coherence.errors import InputError
from channel_coherence.timescales import coherence_exponent

kinds = st.sampled_from(sorted(units.UNIT_IN_SI))


@given(st.floats(min_value=1e-40, max_value=1e10), kinds)
def test_round_trip(value, kind):
    assert units.from_natural(units.to_natural(value, kind), kind) == pytest.approx(value, rel=1e-12)


def test_unknown_kind():
    with pytest.raises(InputError):
        units.to_natural(1.0, "charge")


def test_coherence_exponent_is_dimensionless():
    # potassium ion, 0.3 nm separation, 0.1 eV asymmetry
    m, w, eps = 6.49e-26, 3e-10, 1.602e-20
    si = w * (m * eps / 2) ** 0.5 / units.HBAR
    nat = coherence_exponent(units.to_natural(m, "mass"), units.to_natural(eps, "energy"), units.to_natural(w, "length"))
    assert nat == pytest.approx(si, rel=1e-12)
