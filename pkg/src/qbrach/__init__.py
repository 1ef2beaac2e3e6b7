"""Time-optimal qubit control: closed-form brachistochrone solutions, frame
transformations, hyperbolic analogues and a verifier for their identities."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
