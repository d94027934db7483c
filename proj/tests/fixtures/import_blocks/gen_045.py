with ctx() as c:
    pass
