from .settings import Settings, default_workers, get_settings
from .utils import Utils

__all__ = ['Settings', 'Utils', 'default_workers', 'get_settings']
