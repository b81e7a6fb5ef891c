from fractions import Fraction

from hypothesis import strategies as st

from stringnet.net import FrameParams, NetConfig, Spacing

F = Fraction
SQUARES = (F(0), F(1, 16), F(1, 4), F(9, 16), F(1))
FAMILY_N3 = (F(0), F(3, 10), F(7, 10), F(1))
FRAMES = (FrameParams(1, 0), FrameParams(F(3, 5), F(4, 5)), FrameParams(F(3, 5), F(-4, 5)))


def cfg(n, a=1, b=0, spacing=None):
    return NetConfig(n, FrameParams(F(a), F(b)), None if spacing is None else Spacing(tuple(spacing)))


@st.composite
def spacings(draw, min_n=1, max_n=8, max_den=40):
    """Strictly increasing rational pegs from 0 to 1."""
    n = draw(st.integers(min_n, max_n))
    inner = draw(
        st.sets(
            st.fractions(min_value=0, max_value=1, max_denominator=max_den).filter(lambda v: 0 < v < 1),
            min_size=n - 1,
            max_size=n - 1,
        )
    )
    return Spacing((F(0), *sorted(inner), F(1)))


frames = st.builds(
    FrameParams,
    st.fractions(min_value=F(1, 20), max_value=3, max_denominator=30),
    st.fractions(min_value=-2, max_value=2, max_denominator=30),
)


@st.composite
def configs(draw, min_n=1, max_n=8):
    """Right frame with arbitrary pegs, or any frame with equidistant pegs."""
    if draw(st.booleans()):
        sp = draw(spacings(min_n, max_n))
        return NetConfig(sp.n, FrameParams(), sp)
    n = draw(st.integers(min_n, max_n))
    return NetConfig(n, draw(frames))


# acceptance results, filled by test_acceptance.py and summarized at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
