from math import gcd
from random import Random

from src.abelian.group import FgAbGroup, Homomorphism


def random_hom(rng: Random, source: FgAbGroup, target: FgAbGroup, bound: int = 5) -> Homomorphism:
    """A random well-defined homomorphism: a generator of order m goes to something killed by m"""
    images = []
    for m in source.moduli:
        image = []
        for e in target.moduli:
            if m and e:
                g = gcd(m, e)
                image.append(rng.randrange(g) * (e // g))
            elif m:
                image.append(0)
            else:
                image.append(rng.randrange(e) if e else rng.randint(-bound, bound))
        images.append(image)
    return Homomorphism.from_images(source, target, images)


def chains(max_order: int, max_factors: int) -> list[FgAbGroup]:
    """Every finite group in invariant-factor form with at most max_factors factors and order <= max_order"""
    found = [FgAbGroup()]

    def extend(torsion: tuple[int, ...], order: int):
        if len(torsion) == max_factors:
            return
        start = torsion[-1] if torsion else 2
        for d in range(start, max_order // order + 1):
            if torsion and d % torsion[-1]:
                continue
            found.append(FgAbGroup(0, torsion + (d,)))
            extend(torsion + (d,), order * d)

    extend((), 1)
    return found
