field = dict(type='QuadraticField', d=2)
