from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("arrangecount")
except PackageNotFoundError:
    # package is not installed
    pass
