from ..utils.meta import Registry, build_from_cfg


FRAME_FACTORIES = Registry("frame factory")


def build_frame_factory(cfg=None, default_args=None):
    if cfg is None:
        cfg = dict(type="DefaultFrameFactory")
    return build_from_cfg(cfg, FRAME_FACTORIES, default_args)
