from . import rel
if cond():
    try:
        if cond():
            with ctx() as c:
                f(x)
        if cond():
            x = 1
            import ujson
            with ctx() as c:
                import gym.wrappers as m1, yaml
                import ujson as m1, json
                from .pkg import rel
        else:
            import numpy
            import urllib2
    except ImportError:
        import json
        import celery as m1, gym.wrappers
        import urllib2
    else:
        import gym.wrappers
        pass
elif other():
    import json
    from .pkg import rel
elif other():
    from .pkg import rel
    import json
else:
    import numpy
    from localmod import name_a, name_b as nb
y = [i for i in z]
x = 1
import gym.wrappers
from .pkg import rel
