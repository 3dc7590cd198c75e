"""grpwild - wildness of finite groups under their automorphisms."""

# mypy: disable-error-code="no-redef"
try:
    from .models import TOOL_VERSION as __version__
except ImportError:
    from models import TOOL_VERSION as __version__

__all__ = ["__version__"]
