class BaseObject:
    """
    Plain report object. Fields are instance attributes; the composer writes
    every field that is not None.
    """

    def __repr__(self):
        fields = ", ".join(f"{k}={v!r}" for k, v in vars(self).items() if v is not None)
        return f"{type(self).__name__}({fields})"
