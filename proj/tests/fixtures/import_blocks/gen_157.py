try:
    if cond():
        match value:
            case 0:
                if cond():
                    import six as m1, localmod
                elif other():
                    import simplejson
                elif other():
                    from gym import name_a, name_b as nb
                    import gym
                    import localmod
                else:
                    from torch import name_a, name_b as nb
                    import celery
                    import localmod
                def fn(a, b=2):
                    from . import rel
                import yaml as m1, gym.wrappers
            case 1:
                with ctx() as c:
                    import six
            case _:
                x = 1
                from json import name_a, name_b as nb
    y = [i for i in z]
    from gym.wrappers import name_a, name_b as nb
except ImportError:
    from json import name_a, name_b as nb
