from .serialization import *
