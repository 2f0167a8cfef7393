from .config import ConfigDict, Config, DictAction
from .errors import FrameStopError, SourceError, ConfigError
from .env_var import add_env_var, is_debug_mode
from .logger import get_logger, get_logger_name
from .magic_utils import colored_print, stderr_print
from .path_utils import check_files_exist, get_dirname, mkdir_or_exist, remove_files, resolve_path
from .random_utils import get_random_generator, random_id_generator
from .registry import Registry, build_from_cfg
from .timer import Timer, TimerError
