"""Economic resolutions of 3-fold terminal cyclic quotient singularities as
moduli of G-constellations: fans, Danilov bricks, stability parameters and
the GIT chamber, all in exact arithmetic."""

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoised fans, bricks, parameters and chambers."""
    from . import brick, chamber, fan, stability

    for f in (fan.econ_fan, brick.danilov_bricks, chamber.simple_roots, chamber.chamber_rays,
              stability._kedzierski, stability._mask_matrix):
        f.cache_clear()
