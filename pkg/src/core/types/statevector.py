"""
Statevector alias.

Amplitudes are a complex vector of length ``2**n_sites`` with site 0 as the
most significant bit of the basis index.
"""

import numpy as np
import numpy.typing as npt

Statevector = npt.NDArray[np.complex128]
