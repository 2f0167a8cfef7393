from .handlers import *
from .io import dump, load
