from dataclasses import dataclass, replace

TAU_ROOT = 1e-12
TAU_POS = 1e-9
GCD_CUTOFF = 1e-10


@dataclass(frozen=True)
class Tolerances:
    """Numerical knobs shared by every stage.

    ``tau_root`` is the relative isolation width for real roots, ``tau_pos``
    the floor a weighted positivity margin must exceed, ``eta`` the margin the
    common-point search aims for.
    """

    tau_pos: float = TAU_POS
    tau_root: float = TAU_ROOT
    gcd_cutoff: float = GCD_CUTOFF
    eta: float = 1e-6
    max_iters: int = 200
    max_halvings: int = 64
    box_doublings: int = 10

    def __post_init__(self):
        for name in ("tau_pos", "tau_root", "gcd_cutoff", "eta"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")

    def with_(self, **kw):
        return replace(self, **kw)


DEFAULT = Tolerances()
