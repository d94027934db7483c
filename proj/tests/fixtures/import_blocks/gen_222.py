import json as m1, numpy
with ctx() as c:
    def fn(a, b=2):
        with ctx() as c:
            with ctx() as c:
                import ujson as m1, six
                f(x)
                import simplejson
            try:
                from simplejson import name_a, name_b as nb
                import simplejson
                import torch
            finally:
                import celery
        import celery
        try:
            import urllib.request
        except ImportError:
            try:
                from ujson import name_a, name_b as nb
                import helpers.sub
                import helpers.sub
            except ImportError:
                from .pkg import rel
                import torch as m1, numpy
            except Exception as e:
                import celery
            finally:
                pass
                import numpy
                import torch
            if cond():
                import celery as m1, ujson
            else:
                from torch import name_a, name_b as nb
                from gym import name_a, name_b as nb
            while flag:
                import gym as m1, torch
        else:
            class K(Base):
                from .pkg import rel
            match value:
                case 0:
                    import yaml
if cond():
    from . import rel
    from yaml import name_a, name_b as nb
    import ujson
elif other():
    with ctx() as c:
        f(x)
