"""Physical constants shared by the membrane models (values used throughout the model tables)."""

FARADAY = 96485.0  # C/mol
GAS_CONSTANT = 8.314  # J/(mol K)
TEMPERATURE = 298.0  # K
Z_CA = 2  # Ca2+ valence
AVOGADRO = 6.02214076e23  # 1/mol

MMHG_TO_PA = 133.322
ANGSTROM2_TO_M2 = 1e-20
NM_TO_M = 1e-9  # nanomolar -> molar
CM2_TO_M2 = 1e-4
