from steinberg_schur.common.settings import Settings
