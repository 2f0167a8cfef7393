from .streams import EVENT, GEOMETRY, HIGH_VOLTAGE


class DispatchSupport:
    """Routes a frame to the handler of the stream that drove it."""

    handlers = {GEOMETRY: "geometry", HIGH_VOLTAGE: "high_voltage", EVENT: "event"}
    fallback = "other_stream"

    def handler_name(self, frame):
        return self.handlers.get(frame.driving_stream, self.fallback)

    def dispatch_frame(self, frame, listener):
        """Invoke exactly one handler of `listener`; returns the name of that handler."""
        name = self.handler_name(frame)
        getattr(listener, name)(frame)
        return name


def dispatch_frame(support, frame, listener):
    return support.dispatch_frame(frame, listener)
