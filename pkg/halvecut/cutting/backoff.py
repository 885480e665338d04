from typing import Optional


class SampleBackoff:
    """Retry schedule for sample-and-verify constructions.

    The first retry keeps the base constant (a fresh seed is often enough); every retry after
    that multiplies it by ``exponent`` up to ``max_value``.
    """

    def __init__(self, base: int = 1, exponent: int = 2, max_value: Optional[int] = None, max_tries: Optional[int] = None):
        self.base = base
        self.exponent = exponent
        self.max_value = max_value
        self.max_tries = max_tries
        self._attempts = 0

    def next_constant(self) -> Optional[int]:
        '''Returns the sample constant of the next attempt, or None if max_tries is exceeded.'''
        if self.max_tries is not None and self._attempts >= self.max_tries:
            return None

        value = self.base * (self.exponent ** max(0, self._attempts - 1))
        if self.max_value is not None:
            value = min(value, self.max_value)

        self._attempts += 1
        return value

    @property
    def attempts(self) -> int:
        '''Returns the current number of attempts.'''
        return self._attempts
