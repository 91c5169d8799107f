__title__ = "hopf-kernels"
__version__ = "0.1.0"
