field = dict(type='QuadraticField', d=-5)
