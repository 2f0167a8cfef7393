from .base import BaseFileHandler
from .json_handler import JsonHandler
from .yaml_handler import YamlHandler
from .txt_handler import TxtHandler
