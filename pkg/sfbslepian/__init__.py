"""sfbslepian - band-limited SFB kernels and Slepian concentration."""
