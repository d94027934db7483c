try:
    from .pkg import rel
except ImportError:
    with ctx() as c:
        if cond():
            for i in range(3):
                import urllib2
                x = 1
    class K(Base):
        match value:
            case 0:
                class K(Base):
                    import json
                    import gym.wrappers as m1, simplejson
                import urllib2
                for i in range(3):
                    import helpers.sub
                    import urllib2
                    x = 1
            case 1:
                if cond():
                    from gym.wrappers import name_a, name_b as nb
                    y = [i for i in z]
                    import six
                elif other():
                    import torch
                    x = 1
                with ctx() as c:
                    import helpers.sub
                class K(Base):
                    from six import name_a, name_b as nb
                    from localmod import name_a, name_b as nb
            case _:
                from . import rel
                from helpers.sub import name_a, name_b as nb
        while flag:
            from .pkg import rel
    def fn(a, b=2):
        if cond():
            import helpers.sub
        elif other():
            try:
                import simplejson
                import json
                import urllib.request
            except ImportError:
                import simplejson
                f(x)
            finally:
                import helpers.sub as m1, torch
                x = 1
                import celery as m1, simplejson
        else:
            f(x)
        from localmod import name_a, name_b as nb
except Exception as e:
    def fn(a, b=2):
        with ctx() as c:
            class K(Base):
                pass
                from . import rel
                pass
            import helpers.sub
        def fn(a, b=2):
            x = 1
        import helpers.sub
    f(x)
finally:
    import urllib.request as m1, gym.wrappers
