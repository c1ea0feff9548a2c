"""Independent reference of the bit generator, used to freeze expected values.

Reimplements the documented driver contract from scratch: one shared logistic
stream, each block consumes one sample for its gap m and then m samples for
the cell indices. Run: python3 generator_oracle.py
"""
from fractions import Fraction


def logistic(y):
    return 4.0 * y * (1.0 - y)


def seed_from_time(t, n):
    y0 = t / float(10 ** len(str(t)))
    v = t % (1 << n)
    x0 = [(v >> (n - 1 - i)) & 1 for i in range(n)]
    return x0, y0


def bits(n, m_set, t, count, emit_initial=True):
    x, y = seed_from_time(t, n)
    m_set = sorted(m_set)
    out = []
    if emit_initial:
        out.extend(x)
    while len(out) < count:
        sample, y = y, logistic(y)
        idx = min(int(Fraction(sample) * len(m_set)), len(m_set) - 1)
        m = m_set[idx]
        for _ in range(m):
            sample, y = y, logistic(y)
            s = int(Fraction(1e7 * sample)) % n  # floor of the binary64 product
            x[s] ^= 1
        out.extend(x)
    return out[:count]


def fnv1a64(data):
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def pack(bs):
    out = bytearray((len(bs) + 7) // 8)
    for i, b in enumerate(bs):
        if b:
            out[i // 8] |= 0x80 >> (i % 8)
    return bytes(out)


if __name__ == "__main__":
    print("scheme6 t=484076 first 64:", "".join(map(str, bits(5, [14, 15], 484076, 64))))
    print("scheme4 t=484076 first 40:", "".join(map(str, bits(5, [4, 5], 484076, 40))))
    print("scheme3 t=123457 first 48:", "".join(map(str, bits(8, range(1, 9), 123457, 48))))
    print("scheme6 t=484076 strict first 30:", "".join(map(str, bits(5, [14, 15], 484076, 30, False))))
    ks = pack(bits(5, [14, 15], 484076, 8 * 4096))
    print("scheme6 t=484076 fnv1a64(4096 bytes): 0x%016x" % fnv1a64(ks))
    ks = pack(bits(5, [14, 15], 484076, 8 * 1000000))
    print("scheme6 t=484076 fnv1a64(1e6 bytes): 0x%016x" % fnv1a64(ks))
