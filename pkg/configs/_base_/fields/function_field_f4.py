field = dict(type='FunctionField', p=2, e=2)
