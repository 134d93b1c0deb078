"""Independent hand computation of the scripted 2-turbine, 10-day ledger.

Prints every cash-flow component; the values are frozen into
test_economics.cpp and acceptance.cpp.
"""

P, CI, CR, CO = 8000.0, 4.0, 13.0, 25.0
wind = [8, 9, 10, 11, 12, 13, 14, 7, 6, 5]
wave = [0.5, 0.5, 2.0, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5]
price = [50, 52, 54, 56, 58, 60, 62, 64, 66, 68]
N, T = 2, 10
dist = {1: 10.0, 2: 12.0}
fee, salary, Q = 100000.0, 44000.0, 4
r_us, r_ld, lam = 0.85, 0.95, 0.35
startup_energy = 0.06
per_km, hourly = 2.21, 81.03
repair_h, material = 16.0, 5000.0


def mwh(v):
    if v < CI or v >= CO:
        return 0.0
    kw = P if v >= CR else P * (v**3 - CI**3) / (CR**3 - CI**3)
    return kw * 24 / 1000


# failure: turbine 2, day 3. CTV limits: wind <= 10, wave <= 1.5; repair takes 2 days.
# day 3 wave 2.0 (blocked), days 4-7 wind > 10 (blocked), days 8-9 open -> start 8, done 9
up = {(w, d): True for w in (1, 2) for d in range(1, T + 1)}
for d in range(3, 10):
    up[(2, d)] = False

E = [mwh(v) for v in wind]
sales = sum(price[d - 1] * E[d - 1] * sum(up[(w, d)] for w in (1, 2)) for d in range(1, T + 1))
demand = [N * e for e in E]
shortage = sum(price[d - 1] * max(0.0, demand[d - 1] - E[d - 1] * sum(up[(w, d)] for w in (1, 2)))
               for d in range(1, T + 1))
startup = 0.0
for w in (1, 2):
    prev = True
    for d in range(1, T + 1):
        if up[(w, d)] and not prev:
            startup += price[d - 1] * startup_energy
        prev = up[(w, d)]
a_wf = sum(up.values()) / (N * T)
a_wt = [sum(up[(w, d)] for d in range(1, T + 1)) / T for w in (1, 2)]
a_g = sum(E[d - 1] * sum(up[(w, d)] for w in (1, 2)) for d in range(1, T + 1)) / (N * sum(E))
cap = lam * fee
pen_wf = max(0.0, sales * (r_ld - a_wf) / r_ld)
pen_wt = sum(max(0.0, sales / N * (r_ld - a) / r_ld) for a in a_wt)
pen_g = max(0.0, sales * (r_ld - a_g) / r_ld)
ld = min(cap, pen_wf + pen_wt + pen_g)
us = min(cap, max(0.0, sales * (a_g - r_us) / r_us))
t_dist = 2 * dist[2] * per_km
t_idle = repair_h / 2 * hourly
labor = Q * salary / 365 * T

owner_i = sales + ld
owner_c = fee + us + material + shortage + startup
con_i = fee + us
con_c = t_dist + t_idle + ld + labor
for k, v in [("energy_sales", sales), ("shortage", shortage), ("startup", startup), ("materials", material),
             ("fixed_fee", fee), ("technician_labor", labor), ("transport_distance", t_dist),
             ("transport_idle", t_idle), ("penalty_wf", pen_wf), ("penalty_wt", pen_wt), ("penalty_g", pen_g),
             ("liquidated_damages", ld), ("upside_sharing", us), ("owner_income", owner_i),
             ("owner_cost", owner_c), ("owner_profit", owner_i - owner_c), ("contractor_income", con_i),
             ("contractor_cost", con_c), ("contractor_profit", con_i - con_c),
             ("a_wf", a_wf), ("a_wt1", a_wt[0]), ("a_wt2", a_wt[1]), ("a_g", a_g)]:
    print(f"{k} = {v:.6f}")
