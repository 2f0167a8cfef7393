import os
import os.path as osp
from pathlib import Path


def get_dirname(x):
    return osp.dirname(str(x))


def check_files_exist(filenames, msg_tmpl='file "{}" does not exist'):
    if isinstance(filenames, (str, Path)):
        filenames = [filenames]
    for filename in filenames:
        if not osp.isfile(str(filename)):
            raise FileNotFoundError(msg_tmpl.format(filename))


def mkdir_or_exist(dir_name, mode=0o777):
    if dir_name == "":
        return
    dir_name = osp.expanduser(str(dir_name))
    os.makedirs(dir_name, mode=mode, exist_ok=True)


def resolve_path(path, base_dir=None):
    """Expand `~` and make `path` absolute, relative paths are taken from `base_dir` (or the working directory)."""
    path = osp.expanduser(str(path))
    if osp.isabs(path):
        return path
    if base_dir is None:
        return osp.abspath(path)
    return osp.abspath(osp.join(str(base_dir), path))


def remove_files(filenames):
    for filename in filenames:
        if filename is not None and osp.isfile(filename):
            os.remove(filename)
