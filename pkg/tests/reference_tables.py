"""Published error tables used as acceptance targets.

Each table maps a key to ``[(level, error, order_or_None), ...]``.
"""

# Example 1, N = 1000, max_n ||e^n||, levels are 1/tau
TEMPORAL = {
    ("I", 1.1): [(16, 3.8171e-4, None), (32, 9.6497e-5, 1.9839), (64, 2.4292e-5, 1.9900),
                 (128, 6.1308e-6, 1.9863), (256, 1.5774e-6, 1.9585)],
    ("I", 1.5): [(16, 8.3180e-4, None), (32, 2.0297e-4, 2.0350), (64, 5.0160e-5, 2.0167),
                 (128, 1.2504e-5, 2.0042), (256, 3.1593e-6, 1.9847)],
    ("I", 1.9): [(16, 8.5199e-4, None), (32, 1.5672e-4, 2.4427), (64, 3.2382e-5, 2.2749),
                 (128, 7.2483e-6, 2.1595), (256, 1.6813e-6, 2.1081)],
    ("II", 1.1): [(16, 1.5850e-3, None), (32, 4.0136e-4, 1.9815), (64, 1.0101e-4, 1.9904),
                  (128, 2.5374e-5, 1.9931), (256, 6.3960e-6, 1.9881)],
    ("II", 1.5): [(16, 2.4395e-3, None), (32, 6.0870e-4, 2.0028), (64, 1.5214e-4, 2.0004),
                  (128, 3.8069e-5, 1.9987), (256, 9.5594e-6, 1.9936)],
    ("II", 1.9): [(16, 2.0188e-3, None), (32, 5.0043e-4, 2.0122), (64, 1.2407e-4, 2.0120),
                  (128, 3.0911e-5, 2.0050), (256, 7.7600e-6, 1.9940)],
}

# Example 1, tau = 5e-4 (n_T = 2000), max_n ||e^n||, levels are N
SPATIAL = {
    ("I", 1.1): [(16, 2.2415e-4, None), (32, 5.6079e-5, 1.9989), (64, 1.4040e-5, 1.9979),
                 (128, 3.5287e-6, 1.9923), (256, 9.0088e-7, 1.9697)],
    ("I", 1.5): [(16, 2.2608e-4, None), (32, 5.6560e-5, 1.9989), (64, 1.4178e-5, 1.9961),
                 (128, 3.5826e-6, 1.9846), (256, 9.3364e-7, 1.9401)],
    ("I", 1.9): [(16, 2.7949e-4, None), (32, 6.9901e-5, 1.9994), (64, 1.7486e-5, 1.9991),
                 (128, 4.3816e-6, 1.9967), (256, 1.1050e-6, 1.9875)],
    ("II", 1.1): [(16, 2.2423e-4, None), (32, 5.6158e-5, 1.9974), (64, 1.4119e-5, 1.9919),
                  (128, 3.6078e-6, 1.9684), (256, 9.7994e-7, 1.8803)],
    ("II", 1.5): [(16, 2.2618e-4, None), (32, 5.6665e-5, 1.9969), (64, 1.4283e-5, 1.9881),
                  (128, 3.6876e-6, 1.9536), (256, 1.0386e-6, 1.8280)],
    ("II", 1.9): [(16, 2.7960e-4, None), (32, 7.0014e-5, 1.9977), (64, 1.7599e-5, 1.9922),
                  (128, 4.4937e-6, 1.9695), (256, 1.2177e-6, 1.8838)],
}

# Newton-Gregory scheme on Example 1: (1/tau, 1/h, beta) -> (error or None for '*', r as printed)
NEWTON_GREGORY = {
    (200, 16, 1.1): (2.2620e-4, "0.1406"), (200, 16, 1.5): (2.2762e-4, "0.0640"), (200, 16, 1.9): (2.7163e-4, "0.0105"),
    (200, 32, 1.1): (5.8128e-5, "0.5625"), (200, 32, 1.5): (5.8100e-5, "0.2560"), (200, 32, 1.9): (6.2044e-5, "0.0419"),
    (200, 64, 1.1): (3.5957e-2, "2.2499"), (200, 64, 1.5): (1.5717e-5, "1.0240"), (200, 64, 1.9): (9.6312e-6, "0.1678"),
    (200, 128, 1.1): (None, "8.9994"), (200, 128, 1.5): (None, "4.0960"), (200, 128, 1.9): (4.2557e-6, "0.6711"),
    (200, 256, 1.1): (None, "35.9976"), (200, 256, 1.5): (None, "16.3840"), (200, 256, 1.9): (None, "2.6845"),
    (1000, 16, 1.1): (2.2421e-4, "0.0239"), (1000, 16, 1.5): (2.2609e-4, "0.0057"), (1000, 16, 1.9): (2.7916e-4, "0.0005"),
    (1000, 32, 1.1): (5.6137e-5, "0.0958"), (1000, 32, 1.5): (5.6573e-5, "0.0229"), (1000, 32, 1.9): (6.9573e-5, "0.0020"),
    (1000, 64, 1.1): (1.4098e-5, "0.3831"), (1000, 64, 1.5): (1.4190e-5, "0.0916"), (1000, 64, 1.9): (1.7158e-5, "0.0079"),
    (1000, 128, 1.1): (None, "1.5323"), (1000, 128, 1.5): (3.5947e-6, "0.3664"), (1000, 128, 1.9): (4.0529e-6, "0.0315"),
    (1000, 256, 1.1): (None, "6.1292"), (1000, 256, 1.5): (None, "1.4654"), (1000, 256, 1.9): (7.7662e-7, "0.1261"),
    (2000, 16, 1.1): (2.2415e-4, "0.0112"), (2000, 16, 1.5): (2.2604e-4, "0.0020"), (2000, 16, 1.9): (2.7940e-4, "0.0001"),
    (2000, 32, 1.1): (5.6075e-5, "0.0447"), (2000, 32, 1.5): (5.6525e-5, "0.0081"), (2000, 32, 1.9): (6.9809e-5, "0.0005"),
    (2000, 64, 1.1): (1.4036e-5, "0.1787"), (2000, 64, 1.5): (1.4143e-5, "0.0324"), (2000, 64, 1.9): (1.7394e-5, "0.0021"),
    (2000, 128, 1.1): (3.5246e-6, "0.7148"), (2000, 128, 1.5): (3.5476e-6, "0.1295"), (2000, 128, 1.9): (4.2891e-6, "0.0084"),
    (2000, 256, 1.1): (None, "2.8594"), (2000, 256, 1.5): (8.9864e-7, "0.5181"), (2000, 256, 1.9): (1.0133e-6, "0.0338"),
}

# Example 2, tau = h = 1/N, ||e^{n_T}|| at t = 1, levels are N
COUPLED = {
    ("III1", 1.2): [(32, 8.4650e-6, None), (64, 2.1115e-6, 2.0033), (128, 5.2733e-7, 2.0015),
                    (256, 1.3178e-7, 2.0006), (512, 3.2939e-8, 2.0003)],
    ("III2", 1.2): [(32, 6.7927e-6, None), (64, 1.6853e-6, 2.0110), (128, 4.1958e-7, 2.0060),
                    (256, 1.0467e-7, 2.0030), (512, 2.6141e-8, 2.0015)],
    ("III1", 1.5): [(32, 6.2643e-6, None), (64, 1.6018e-6, 1.9675), (128, 4.0577e-7, 1.9809),
                    (256, 1.0225e-7, 1.9885), (512, 2.5688e-8, 1.9930)],
    ("III2", 1.5): [(32, 6.8147e-6, None), (64, 1.6981e-6, 2.0047), (128, 4.2395e-7, 2.0020),
                    (256, 1.0592e-7, 2.0010), (512, 2.6469e-8, 2.0005)],
    ("III1", 1.7): [(32, 4.8058e-6, None), (64, 1.2490e-6, 1.9440), (128, 3.2035e-7, 1.9631),
                    (256, 8.1431e-8, 1.9760), (512, 2.0586e-8, 1.9839)],
    ("III2", 1.7): [(32, 8.0483e-6, None), (64, 2.0105e-6, 2.0011), (128, 5.0129e-7, 2.0039),
                    (256, 1.2508e-7, 2.0028), (512, 3.1233e-8, 2.0017)],
    ("III1", 1.8): [(32, 4.8725e-6, None), (64, 1.2457e-6, 1.9676), (128, 3.1645e-7, 1.9769),
                    (256, 7.9953e-8, 1.9848), (512, 2.0129e-8, 1.9898)],
    ("III2", 1.8): [(32, 7.1377e-6, None), (64, 1.8058e-6, 1.9828), (128, 4.5167e-7, 1.9993),
                    (256, 1.1286e-7, 2.0008), (512, 2.8213e-8, 2.0000)],
    ("III1", 1.9): [(32, 5.5981e-6, None), (64, 1.4231e-6, 1.9759), (128, 3.5907e-7, 1.9867),
                    (256, 9.0096e-8, 1.9947), (512, 2.2531e-8, 1.9996)],
    ("III2", 1.9): [(32, 6.8122e-6, None), (64, 1.7064e-6, 1.9972), (128, 4.2691e-7, 1.9990),
                    (256, 1.0665e-7, 2.0011), (512, 2.6620e-8, 2.0023)],
    ("III1", 1.99): [(32, 7.9469e-6, None), (64, 2.0114e-6, 1.9822), (128, 5.0676e-7, 1.9888),
                     (256, 1.2720e-7, 1.9942), (512, 3.1860e-8, 1.9972)],
    ("III2", 1.99): [(32, 1.1951e-5, None), (64, 2.9856e-6, 2.0010), (128, 7.4851e-7, 1.9959),
                     (256, 1.8752e-7, 1.9970), (512, 4.6938e-8, 1.9982)],
    ("III1", 2.0): [(32, 9.2889e-6, None), (64, 2.2342e-6, 2.0558), (128, 5.4612e-7, 2.0324),
                    (256, 1.3491e-7, 2.0172), (512, 3.3520e-8, 2.0090)],
    ("III2", 2.0): [(32, 1.3606e-5, None), (64, 3.3105e-6, 2.0391), (128, 8.1441e-7, 2.0232),
                    (256, 2.0190e-7, 2.0121), (512, 5.0258e-8, 2.0062)],
}
