from ..utils.meta import Registry, build_from_cfg


LISTENERS = Registry("listener")

COMPOSITE_TYPES = ("Sequence", "Branch", "Conditional")


def build_listener(cfg, leaf_builder=None):
    """Build a listener tree from nested config dicts.

    Composite nodes are `dict(type="Sequence"|"Branch", children=[...])` and
    `dict(type="Conditional", predicate=..., downstream=...)`. Every other node is built by `leaf_builder`
    (default: the LISTENERS registry).
    """
    if leaf_builder is None:
        leaf_builder = lambda leaf_cfg: build_from_cfg(leaf_cfg, LISTENERS)
    if not isinstance(cfg, dict):
        raise TypeError(f"A listener config must be a dict, but got {type(cfg)}")

    node_type = cfg.get("type", None)
    if node_type in ("Sequence", "Branch"):
        children = cfg.get("children", None)
        if not children:
            raise ValueError(f"{node_type} needs a non-empty `children` list")
        built = [build_listener(child, leaf_builder) for child in children]
        return LISTENERS.get(node_type)(built)
    if node_type == "Conditional":
        if "predicate" not in cfg or "downstream" not in cfg:
            raise ValueError("Conditional needs both `predicate` and `downstream`")
        predicate = build_listener(cfg["predicate"], leaf_builder)
        downstream = build_listener(cfg["downstream"], leaf_builder)
        return LISTENERS.get(node_type)(predicate, downstream)
    return leaf_builder(cfg)
