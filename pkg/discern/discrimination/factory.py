import factory
from factory.random import randgen

from discern.core.jordan import jordan_decompose, random_embedding

from .problem import DiscriminationProblem


def _weights(k, floor):
    raw = [randgen.uniform(floor, 1) for _ in range(k)]
    total = sum(raw)
    return [w / total for w in raw]


class DiscriminationProblemFactory(factory.Factory):
    """
    Random problems with Jordan cosines in [min_cos, max_cos].

    With angles_only the problem carries no frames; otherwise an explicit
    subspace pair is embedded in C^2k and decomposed again.
    """
    class Meta:
        model = DiscriminationProblem

    class Params:
        sectors = 2
        angles_only = False
        min_cos = 0.0
        max_cos = 0.95
        min_weight = 0.05
        uniform = False
        seed = factory.LazyFunction(lambda: randgen.randrange(2 ** 32))

    cos_angles = factory.LazyAttribute(
        lambda o: sorted((randgen.uniform(o.min_cos, o.max_cos) for _ in range(o.sectors)), reverse=True)
    )
    alpha = factory.LazyAttribute(lambda o: None if o.uniform else _weights(o.sectors, o.min_weight))
    beta = factory.LazyAttribute(lambda o: None if o.uniform else _weights(o.sectors, o.min_weight))
    jordan = factory.LazyAttribute(
        lambda o: None if o.angles_only else jordan_decompose(*random_embedding(o.cos_angles, o.seed))
    )

    @classmethod
    def _build(cls, model_class, *args, **kwargs):
        return model_class.create(**kwargs)

    @classmethod
    def _create(cls, model_class, *args, **kwargs):
        return model_class.create(**kwargs)
