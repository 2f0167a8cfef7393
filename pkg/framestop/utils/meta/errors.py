class FrameStopError(Exception):
    """Base class of every error raised by framestop."""

    def __init__(self, message):
        self.message = message
        super(FrameStopError, self).__init__(message)


class SourceError(FrameStopError):
    """A record or stop source could not supply its data."""

    def __init__(self, detail):
        self.detail = detail
        super(SourceError, self).__init__(f"source error: {detail}")


class ConfigError(FrameStopError):
    def __init__(self, detail):
        self.detail = detail
        super(ConfigError, self).__init__(f"config error: {detail}")
