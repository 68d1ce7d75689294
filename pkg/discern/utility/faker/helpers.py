import factory.random
import random


# reseed the random generators used by the factories
def reseed(seed):
    random.seed(seed)
    factory.random.reseed_random(seed)
