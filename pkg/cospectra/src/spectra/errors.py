"""Exception types raised by the spectra package."""


class SpectraError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class GraphError(SpectraError, ValueError):
    pass


class Graph6Error(SpectraError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"graph6 parse error at byte {offset}: {message}")
        self.offset = offset


class CographError(SpectraError, ValueError):
    pass


class CapExceededError(SpectraError, ValueError):
    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


class ConvergenceError(SpectraError, RuntimeError):
    def __init__(self, sweeps: int, off_norm: float):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})"
        )
        self.sweeps = sweeps
        self.off_norm = off_norm


class OrderAxiomError(SpectraError, RuntimeError):
    """The neighborhood relation broke a partial-order axiom. Always a bug."""


class CampaignError(SpectraError, RuntimeError):
    """A campaign worker raised; partial results are discarded."""
