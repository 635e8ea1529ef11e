"""Default size caps.

Ideal enumeration is exponential in the carrier size, so structures fed to
full lattice enumeration are capped much lower than constructed carriers.
"""

CARRIER_CAP = 4096
IDEAL_ENUM_CAP = 16
SPEC_POWERSET_CAP = 20
BRUTE_FORCE_CAP = 10
