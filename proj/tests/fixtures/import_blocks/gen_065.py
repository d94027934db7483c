match value:
    case 0:
        class K(Base):
            def fn(a, b=2):
                pass
                class K(Base):
                    import localmod as m1, gym
                    x = 1
                try:
                    x = 1
                except ImportError:
                    x = 1
                    x = 1
                    import gym
                except Exception as e:
                    import torch as m1, urllib2
                    from . import rel
                finally:
                    x = 1
                    import yaml
                    f(x)
            import gym
            x = 1
        import simplejson as m1, torch
    case 1:
        pass
import yaml
from gym.wrappers import name_a, name_b as nb
from torch import name_a, name_b as nb
import urllib2 as m1, ujson
y = [i for i in z]
