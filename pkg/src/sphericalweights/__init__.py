"""Extended weight semigroups of affine spherical homogeneous spaces, computed exactly."""

__version__ = "0.1.0"
