import functools


# Generators that build a list of samples are decorated with @vectorize
# and just yield, e.g.
#
#    @vectorize
#    def random_octonions(count, seed):
#        for _ in range(count):
#            yield ...
#
# The result is a vector, so attributes can be pulled from every element:
#
#    vector(report.checks).status
class vector(list):
    """A list whose attribute access maps over the elements:
           v.attr == vector(elem.attr for elem in v)

    >>> from fractions import Fraction
    >>> v = vector((Fraction(1, 2), Fraction(2, 3), Fraction(3)))
    >>> list(v.denominator)
    [2, 3, 1]
    >>> v.where(denominator=1)
    vector[3]
    >>> type(v[1:]).__name__
    'vector'
    """

    def __getattr__(self, name):
        if name.startswith('__'):
            raise AttributeError(name)
        return vector(getattr(elem, name) for elem in self)

    def __repr__(self):
        return 'vector[' + ', '.join(str(elem) for elem in self) + ']'

    def __getitem__(self, i):
        item = super().__getitem__(i)
        return vector(item) if isinstance(i, slice) else item

    def where(self, **attrs):
        """elements whose attributes equal the given values"""
        return vector(elem for elem in self
                      if all(getattr(elem, k) == v for k, v in attrs.items()))


def vectorize(generator_func):
    @functools.wraps(generator_func)
    def wrapper(*args, **kwargs):
        return vector(generator_func(*args, **kwargs))
    return wrapper
