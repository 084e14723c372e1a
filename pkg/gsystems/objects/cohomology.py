from __future__ import annotations
from gsystems.objects.base import BaseObject
from typing import Optional


class Window(BaseObject):
    """
    Coordinates window of a cochain space: ξ-degree cap, cochain degree and
    x-degree bounds of the source and target of the differential.

    Args:
        n (int): ξ-degree cap of Pol(n)

        k (int): cochain degree

        D_in (int): x-degree bound of the source

        D_out (int): x-degree bound of the target
    """

    def __init__(self, n: int = None, k: int = None, D_in: int = None, D_out: int = None) -> None:
        self.n = n
        self.k = k
        self.D_in = D_in
        self.D_out = D_out


class CohomologyReport(BaseObject):
    """
    Exact ranks of the twisted differential on one window.

    Args:
        window (:class:`Window`): the window of the cochain space C^k

        dim_cochains (int): dimension of C^k on the window

        dim_kernel (int): dimension of the kernel of C^k -> C^{k+1}

        dim_image (int): rank of C^{k-1} -> C^k landing in the window

        h_dim (int): dim_kernel - dim_image

        window_closed (bool): True when the differential preserves x-degree windows,
            so h_dim is the cohomology of the graded piece; otherwise it is a
            window-relative bound

        label (str): "cohomology" or "window-relative bound"

        oracle (str): Optional. verdict of the averaging oracle when it was consulted
    """

    def __init__(self, window: Window = None, dim_cochains: int = None,
                 dim_kernel: int = None, dim_image: int = None) -> None:
        self.window = window
        self.dim_cochains = dim_cochains
        self.dim_kernel = dim_kernel
        self.dim_image = dim_image
        self.h_dim = None if dim_kernel is None or dim_image is None else dim_kernel - dim_image
        self.window_closed: Optional[bool] = None
        self.label: Optional[str] = None
        self.oracle: Optional[str] = None


class OracleResult(BaseObject):
    """
    Verdict of the averaging oracle.

    Args:
        applicable (bool): False when the oracle declined

        reason (str): why it applied or declined

        primitive (object): Optional. the cochain w with d_{P0} w = z, when applicable
    """

    def __init__(self, applicable: bool = None, reason: str = None) -> None:
        self.applicable = applicable
        self.reason = reason
        self.primitive: Optional[object] = None
