import random
import string

import numpy as np


def random_id_generator(size=6, chars=string.ascii_uppercase, prefix="loop"):
    return prefix + "." + "".join(random.choice(chars) for _ in range(size))


def get_random_generator(seed):
    return np.random.RandomState(seed)

