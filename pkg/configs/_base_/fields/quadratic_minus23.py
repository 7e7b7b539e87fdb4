field = dict(type='QuadraticField', d=-23)
