class DiscernError(Exception):
    pass


class NonConvergence(DiscernError):
    pass


class InvalidInput(DiscernError):
    pass


class EmptyInput(InvalidInput):
    pass


class NotHermitian(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class ZeroSubspace(InvalidInput):
    pass


class NotGeneralPosition(InvalidInput):
    pass


class DegenerateSector(InvalidInput):
    pass


class MissingFrames(InvalidInput):
    pass


class InvalidPrior(InvalidInput):
    pass


class InvalidWeights(InvalidInput):
    pass


class UnnormalizedState(InvalidInput):
    pass


class DegenerateAngles(InvalidInput):
    pass


class InvalidParameters(InvalidInput):
    pass


class InvalidProblemFile(InvalidInput):

    def __init__(self, errors):
        self.errors = errors
        super().__init__(self.describe())

    def describe(self):
        return '; '.join(
            f'{field}: {" ".join(str(m) for m in messages)}' if field != '__all__'
            else ' '.join(str(m) for m in messages)
            for field, messages in self.errors.items()
        )
