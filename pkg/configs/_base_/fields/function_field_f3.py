field = dict(type='FunctionField', p=3, e=1)
