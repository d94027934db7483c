import gym.wrappers
class K(Base):
    while flag:
        with ctx() as c:
            try:
                import six
                y = [i for i in z]
                from .pkg import rel
            except ImportError:
                import localmod as m1, six
                x = 1
                import yaml
        pass
        try:
            from .pkg import rel
            import ujson
        except ImportError:
            import six
            from gym.wrappers import name_a, name_b as nb
        finally:
            from urllib2 import name_a, name_b as nb
            from gym.wrappers import name_a, name_b as nb
            pass
    import urllib2 as m1, localmod
    pass
from .pkg import rel
import numpy as m1, numpy
x = 1
