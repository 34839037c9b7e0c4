"""Published table values, transcribed as strings.

Keys are ``(k, n)``; cells printed as a dash are absent.  Mantissas keep
the three printed digits, in the ``d.dde<exp>`` notation used throughout
the package.
"""

PUBLISHED = {
    "constants": {
        (1, 1): "24",
        (1, 2): "384",
        (1, 3): "6144",
        (1, 4): "98304",
        (1, 5): "1.57e6",
        (1, 6): "2.51e7",
        (1, 7): "4.03e8",
        (1, 8): "6.44e9",
        (1, 9): "1.03e11",
        (1, 10): "1.65e12",
        (2, 2): "1.89e8",
        (2, 3): "1.52e17",
        (2, 4): "1.25e29",
        (2, 5): "1.06e44",
        (2, 6): "9.15e61",
        (2, 7): "8.10e82",
        (2, 8): "7.35e106",
        (2, 9): "6.82e133",
        (2, 10): "6.49e163",
        (3, 3): "1.36e60",
        (3, 4): "1.00e133",
        (3, 5): "9.53e248",
        (3, 6): "1.43e418",
        (3, 7): "4.12e650",
        (3, 8): "2.80e956",
        (3, 9): "5.50e1345",
        (3, 10): "3.81e1828",
    },
    "deltas": {
        (1, 1): "4.17e-5",
        (1, 2): "2.60e-6",
        (1, 3): "1.63e-7",
        (1, 4): "1.02e-8",
        (1, 5): "6.36e-10",
        (1, 6): "3.97e-11",
        (1, 7): "2.48e-12",
        (1, 8): "1.55e-13",
        (1, 9): "9.70e-15",
        (1, 10): "6.06e-16",
        (2, 2): "5.29e-13",
        (2, 3): "6.58e-22",
        (2, 4): "7.98e-34",
        (2, 5): "9.45e-49",
        (2, 6): "1.09e-66",
        (2, 7): "1.23e-87",
        (2, 8): "1.36e-111",
        (2, 9): "1.47e-138",
        (2, 10): "1.54e-168",
        (3, 3): "7.34e-66",
        (3, 4): "9.96e-139",
        (3, 5): "1.05e-254",
        (3, 6): "7.01e-424",
        (3, 7): "2.43e-656",
        (3, 8): "3.57e-962",
        (3, 9): "1.81e-1351",
        (3, 10): "2.62e-1834",
    },
    "epsilons": {
        (1, 1): "1.04e-5",
        (1, 2): "4.24e-13",
        (1, 3): "6.74e-23",
        (1, 4): "4.18e-35",
        (1, 5): "1.01e-49",
        (1, 6): "9.61e-67",
        (1, 7): "3.56e-86",
        (1, 8): "5.14e-108",
        (1, 9): "2.90e-132",
        (1, 10): "6.41e-159",
        (2, 2): "1.89e-37",
        (2, 3): "1.92e-86",
        (2, 4): "1.70e-167",
        (2, 5): "7.64e-290",
        (2, 6): "1.64e-462",
        (2, 7): "1.55e-694",
        (2, 8): "6.06e-995",
        (2, 9): "9.08e-1373",
        (2, 10): "4.87e-1837",
        (3, 3): "3.52e-284",
        (3, 4): "1.29e-722",
        (3, 5): "1.25e-1563",
        (3, 6): "4.16e-3006",
        (3, 7): "2.75e-5289",
        (3, 8): "9.42e-8693",
        (3, 9): "1.94e-13536",
        (3, 10): "1.24e-20180",
    },
    "alphas": {
        (1, 1): "1 - 1.04e-5",
        (1, 2): "1 - 4.24e-13",
        (1, 3): "1 - 6.74e-23",
        (1, 4): "1 - 4.18e-35",
        (1, 5): "1 - 1.01e-49",
        (1, 6): "1 - 9.61e-67",
        (1, 7): "1 - 3.56e-86",
        (1, 8): "1 - 5.14e-108",
        (1, 9): "1 - 2.90e-132",
        (1, 10): "1 - 6.41e-159",
        (2, 2): "1 - 1.89e-37",
        (2, 3): "1 - 1.92e-86",
        (2, 4): "1 - 1.70e-167",
        (2, 5): "1 - 7.64e-290",
        (2, 6): "1 - 1.64e-462",
        (2, 7): "1 - 1.55e-694",
        (2, 8): "1 - 6.06e-995",
        (2, 9): "1 - 9.08e-1373",
        (2, 10): "1 - 4.87e-1837",
        (3, 3): "1 - 3.52e-284",
        (3, 4): "1 - 1.29e-722",
        (3, 5): "1 - 1.25e-1563",
        (3, 6): "1 - 4.16e-3006",
        (3, 7): "1 - 2.75e-5289",
        (3, 8): "1 - 9.42e-8693",
        (3, 9): "1 - 1.94e-13536",
        (3, 10): "1 - 1.24e-20180",
    },
    "alphas-revised": {
        (1, 2): "0",
        (1, 3): "0",
        (1, 4): "1/2",
        (1, 5): "1/2",
        (1, 6): "1/2",
        (1, 7): "1/2",
        (1, 8): "1/2",
        (1, 9): "1/2",
        (1, 10): "1/2",
        (2, 2): "0",
        (2, 3): "0",
        (2, 4): "1 - 1.70e-167",
        (2, 5): "1 - 7.64e-290",
        (2, 6): "1 - 1.64e-462",
        (2, 7): "1 - 1.55e-694",
        (2, 8): "1 - 6.06e-995",
        (2, 9): "1 - 9.08e-1373",
        (2, 10): "1 - 4.87e-1837",
        (3, 3): "0",
        (3, 4): "1 - 1.29e-722",
        (3, 5): "1 - 1.25e-1563",
        (3, 6): "1 - 4.16e-3006",
        (3, 7): "1 - 2.75e-5289",
        (3, 8): "1 - 9.42e-8693",
        (3, 9): "1 - 1.94e-13536",
        (3, 10): "1 - 1.24e-20180",
    },
}
