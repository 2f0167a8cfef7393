from .type_utils import is_null, is_str, is_dict, is_integer, is_seq_of
