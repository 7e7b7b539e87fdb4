field = dict(type='Rationals')
