from collections.abc import Sequence

import numpy as np


def is_null(item):
    return item is None


def is_str(item):
    return isinstance(item, str)


def is_dict(item):
    return isinstance(item, dict)


def is_integer(item):
    return isinstance(item, (int, np.integer)) and not isinstance(item, bool)


def is_seq_of(seq, expected_type=None, seq_type=None):
    if seq_type is None:
        exp_seq_type = Sequence
    else:
        assert isinstance(seq_type, type)
        exp_seq_type = seq_type
    if not isinstance(seq, exp_seq_type):
        return False
    if expected_type:
        for item in seq:
            if not isinstance(item, expected_type):
                return False
    return True
