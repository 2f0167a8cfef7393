from ..loop import LISTENERS, build_listener
from ..utils.meta import ConfigError, Registry, build_from_cfg
from .plugin import adapt_listener


ANALYSES = Registry("analysis")
FILTERS = Registry("filter")


def build_analysis(cfg, default_args=None):
    return build_from_cfg(cfg, ANALYSES, default_args)


def build_filter(cfg, default_args=None):
    return build_from_cfg(cfg, FILTERS, default_args)


def build_analysis_tree(cfg):
    """Build a listener tree whose leaves are filters, sample analyses or registered listeners.

    Analyses are wrapped into record listeners. Returns the tree and the wrapped analyses in tree order;
    analysis names must be unique.
    """
    analyses = []

    def build_leaf(leaf_cfg):
        leaf_type = leaf_cfg.get("type", None)
        if leaf_type in FILTERS:
            return build_filter(leaf_cfg)
        if leaf_type in ANALYSES:
            analysis = build_analysis(leaf_cfg)
            if analysis.name in [plugin.name for plugin in analyses]:
                raise ConfigError(f"two analyses are named {analysis.name}")
            plugin = adapt_listener(analysis, name=analysis.name)
            analyses.append(plugin)
            return plugin
        if leaf_type in LISTENERS:
            return build_from_cfg(leaf_cfg, LISTENERS)
        raise ConfigError(f"unknown listener type {leaf_type!r}")

    try:
        tree = build_listener(cfg, leaf_builder=build_leaf)
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"pipeline_cfg: {e}") from e
    return tree, analyses
