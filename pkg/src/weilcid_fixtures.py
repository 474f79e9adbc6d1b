"""
Expected survey rows used by ``weilcid tables``.

Each entry maps the free coefficients (a_{2g-1}, ..., a_g) of an irreducible
Weil p-polynomial to ``(p_rank, [n, ...])`` where the list holds every n below
the bound for which p is a common index divisor of the n-division field.
Rows are transcribed from published tabulations. The ``complete`` flag marks
tables that list every irreducible polynomial of the configuration; the
others were published as a selection and are checked row by row only.
"""

REFERENCE_TABLES = {
    'p2_g2': {
        'p': 2, 'g': 2, 'n_max': 1000, 'fix': {}, 'complete': True,
        'rows': {
            (-3, 5): (2, [3, 19, 31, 57, 61, 93, 171, 183, 589, 981]),
            (-2, 2): (0, [5, 7, 9, 13, 15, 21, 35, 37, 39, 45, 51, 61, 63, 65, 85, 91, 105, 109, 111, 117, 119, 133, 135, 153, 171, 185, 189, 195, 205, 219, 221, 241, 247, 255, 259, 273, 285, 305, 315, 325, 327, 333, 351, 357, 365, 377, 399, 455, 481, 485, 511, 513, 533, 545, 555, 565, 585, 595, 657, 663, 665, 673, 679, 703, 723, 741, 763, 765, 771, 777, 793, 819, 855, 873, 945, 949, 981, 999]),
            (-2, 3): (2, [7, 47]),
            (-1, -1): (2, [5, 9, 11, 15, 23, 37, 43, 45, 67, 111, 127, 135, 151, 185, 203, 301, 333, 555, 999]),
            (-1, 0): (1, [47]),
            (-1, 1): (2, [3, 9, 103, 127]),
            (-1, 3): (2, [5, 15, 59]),
            (0, -3): (2, [3, 5, 9, 11, 15, 23, 29, 33, 37, 45, 53, 87, 111, 135, 137, 185, 203, 233, 281, 301, 333, 555, 999]),
            (0, -2): (0, [3, 5, 7, 9, 11, 13, 15, 19, 21, 27, 33, 35, 39, 43, 45, 51, 57, 63, 65, 67, 73, 77, 81, 85, 91, 93, 99, 105, 109, 111, 117, 119, 129, 133, 135, 151, 153, 171, 185, 189, 195, 201, 217, 219, 221, 231, 241, 247, 255, 259, 273, 279, 285, 301, 315, 327, 331, 333, 337, 341, 351, 357, 365, 381, 387, 399, 441, 453, 455, 481, 485, 511, 513, 545, 555, 585, 595, 603, 627, 651, 657, 663, 665, 673, 679, 683, 693, 703, 723, 741, 763, 765, 771, 777, 819, 855, 873, 889, 903, 921, 945, 949, 981, 993, 999]),
            (0, -1): (2, [3, 17, 19, 23, 31, 57, 61, 93, 171, 183, 229, 589, 981]),
            (0, 1): (2, [3, 9, 17, 19, 23, 47, 57, 61, 69, 93, 171, 183, 229, 981]),
            (0, 2): (0, [3, 5, 7, 9, 13, 15, 19, 21, 27, 31, 35, 39, 45, 49, 51, 57, 63, 65, 73, 77, 85, 89, 91, 93, 99, 105, 109, 111, 117, 119, 127, 133, 135, 151, 153, 161, 171, 185, 189, 195, 217, 219, 221, 231, 241, 247, 255, 259, 273, 279, 285, 301, 315, 327, 331, 333, 337, 341, 351, 357, 365, 381, 387, 399, 441, 453, 455, 481, 485, 511, 513, 545, 553, 555, 585, 595, 623, 631, 651, 657, 663, 665, 673, 679, 693, 703, 721, 723, 741, 763, 765, 771, 777, 819, 855, 873, 889, 903, 945, 949, 981, 993, 999]),
            (1, -1): (2, [5, 7, 9, 11, 15, 37, 43, 45, 67, 79, 111, 135, 185, 203, 301, 333, 555, 999]),
            (1, 0): (1, [47]),
            (1, 1): (2, [3, 9]),
            (1, 3): (2, [5, 15, 59]),
            (2, 2): (0, [5, 7, 9, 13, 15, 21, 35, 37, 39, 45, 51, 61, 63, 65, 85, 91, 105, 109, 111, 117, 119, 133, 135, 153, 171, 185, 189, 195, 205, 219, 221, 241, 247, 255, 259, 273, 285, 305, 315, 325, 327, 333, 351, 357, 365, 377, 399, 455, 481, 485, 511, 513, 533, 545, 555, 565, 585, 595, 657, 663, 665, 673, 679, 703, 723, 741, 763, 765, 771, 777, 793, 819, 855, 873, 945, 949, 981, 999]),
            (2, 3): (2, [7, 47]),
            (3, 5): (2, [3, 19, 31, 57, 61, 93, 171, 183, 589, 981]),
        },
    },
    'p3_g2': {
        'p': 3, 'g': 2, 'n_max': 500, 'fix': {}, 'complete': True,
        'rows': {
            (-4, 8): (2, [2, 4, 5, 8, 10, 16, 17, 20, 32, 34, 40, 68, 73, 82, 88, 136, 140, 146, 164, 170, 194, 238, 272, 280, 328, 340, 365, 388, 451, 476, 485]),
            (-3, 5): (2, [2, 4, 29, 488]),
            (-3, 7): (2, [2, 4, 10, 19, 20, 40, 44, 80]),
            (-2, 1): (2, [2, 4, 13, 19, 20, 38, 40, 76, 86, 136, 140, 170, 194, 238, 272, 280, 340, 388, 476, 485]),
            (-2, 2): (2, [2, 4, 8, 10, 14, 28, 29, 58, 82, 164, 205, 410]),
            (-2, 4): (2, [2, 4, 8, 23]),
            (-2, 5): (2, [2, 4, 23]),
            (-1, -2): (2, [2, 4, 5, 8, 10, 13, 16, 20, 31, 37, 40, 62, 74, 80, 124, 140, 148, 160, 185, 224, 280, 296, 370]),
            (-1, -1): (2, [2, 4, 23]),
            (-1, 1): (2, [2, 4, 5, 80, 82, 100, 164, 200, 205, 328, 400, 410]),
            (-1, 2): (2, [2, 4, 8, 16]),
            (-1, 3): (1, [2, 4, 5, 17]),
            (-1, 5): (2, [2, 4, 29, 31, 62, 124]),
            (0, -5): (2, [2, 4, 5, 8, 10, 16, 20, 25, 37, 40, 74, 80, 115, 140, 148, 160, 185, 224, 265, 280, 296, 335, 370]),
            (0, -4): (2, [2, 4, 7, 8, 14, 16, 28, 32, 56, 82, 164, 205, 328, 410]),
            (0, -2): (2, [2, 4, 8, 11, 17, 20, 22, 34, 68, 82, 136, 140, 164, 170, 194, 238, 272, 280, 340, 388, 433, 451, 476, 485]),
            (0, -1): (2, [2, 4, 8, 11, 13, 16, 26, 29, 32, 52, 103, 104, 208, 416]),
            (0, 0): (0, [2, 4, 5, 8, 10, 13, 14, 16, 20, 25, 26, 28, 29, 32, 34, 35, 40, 41, 50, 52, 56, 58, 61, 64, 65, 68, 70, 73, 80, 82, 85, 88, 91, 100, 104, 110, 112, 121, 122, 130, 136, 140, 145, 146, 160, 164, 170, 176, 182, 193, 200, 205, 208, 220, 224, 242, 244, 260, 265, 272, 275, 280, 287, 290, 292, 305, 320, 328, 340, 364, 365, 386, 400, 410, 416, 440, 455, 464, 484, 488]),
            (0, 1): (2, [2, 4, 8, 11, 13, 16, 26, 29, 32, 44, 52, 88, 104, 208, 416]),
            (0, 3): (0, [2, 4, 7, 8, 13, 14, 16, 20, 26, 28, 35, 37, 40, 52, 56, 65, 70, 73, 74, 76, 80, 91, 104, 112, 121, 130, 133, 140, 143, 146, 148, 152, 160, 164, 182, 205, 208, 224, 242, 247, 259, 260, 266, 280, 286, 287, 292, 296, 328, 364, 365, 410, 416, 427, 433, 455, 481, 484, 488, 494]),
            (0, 4): (2, [2, 4, 7, 8, 14, 16, 23, 28, 32, 56, 82, 164, 205, 328, 410]),
            (1, -2): (2, [2, 4, 5, 8, 10, 16, 20, 31, 37, 40, 62, 74, 80, 124, 140, 148, 160, 181, 185, 224, 280, 296, 370]),
            (1, -1): (2, [2, 4, 23]),
            (1, 1): (2, [2, 4, 5, 80, 82, 100, 164, 200, 205, 328, 400, 410]),
            (1, 2): (2, [2, 4, 8, 16]),
            (1, 3): (1, [2, 4, 5, 17]),
            (1, 5): (2, [2, 4, 29, 31, 62, 124]),
            (2, 1): (2, [2, 4, 11, 19, 20, 38, 40, 76, 86, 136, 140, 170, 194, 238, 272, 280, 340, 388, 476, 485]),
            (2, 2): (2, [2, 4, 8, 10, 14, 28, 29, 58, 82, 164, 205, 410]),
            (2, 4): (2, [2, 4, 8, 23]),
            (2, 5): (2, [2, 4, 23]),
            (3, 5): (2, [2, 4, 29, 488]),
            (3, 7): (2, [2, 4, 10, 11, 19, 20, 22, 40, 44, 80]),
            (4, 8): (2, [2, 4, 5, 8, 10, 16, 17, 20, 32, 34, 40, 68, 73, 82, 88, 136, 140, 146, 164, 170, 194, 238, 272, 280, 328, 340, 365, 388, 451, 476, 485]),
        },
    },
    'p5_g2_selected': {
        'p': 5, 'g': 2, 'n_max': 500, 'fix': {}, 'complete': False,
        'rows': {
            (-6, 17): (2, [7, 12, 14, 21, 28, 42, 56, 84, 168, 217, 252, 434]),
            (-5, 15): (0, [11, 22, 24, 33, 44, 66, 71, 88, 124, 132, 142, 181, 213, 264, 284, 341, 362, 426, 429, 451, 492]),
            (-4, 8): (2, [2, 4, 8, 16, 42, 56, 84, 168, 377]),
            (-4, 11): (2, [8, 13, 26, 39, 48, 52, 72, 78, 104, 117, 122, 144, 156, 208, 234, 296, 312, 468, 481]),
            (-3, 4): (2, [3, 6, 9, 12, 18, 27, 31, 36, 54, 72, 93, 186, 279, 333, 444]),
            (-3, 8): (2, [12, 13, 19, 26, 38, 39, 42, 52, 56, 78, 84, 91, 104, 156, 168, 182, 228, 234, 247, 273, 312, 342, 364, 468, 494]),
            (-2, -1): (2, [13, 26, 39, 52, 72, 78, 104, 117, 156, 234, 312, 468, 481]),
            (-2, 4): (2, [2, 4, 6, 12, 24]),
            (-1, -4): (2, [7, 14, 28, 42, 56, 63, 72, 84, 126, 154, 168, 252]),
            (-1, 9): (2, [8, 24, 48]),
            (0, -9): (2, [7, 8, 14, 16, 17, 28, 42, 48, 51, 56, 63, 72, 84, 96, 112, 122, 126, 144, 168, 224, 252, 288, 336]),
            (0, -8): (2, [2, 3, 4, 8, 16, 17, 32, 34, 39, 41, 48, 52, 68, 78, 82, 104, 136, 156, 208, 272, 312]),
            (0, -7): (2, [4, 8, 12, 13, 16, 19, 24, 26, 38, 39, 42, 48, 52, 56, 76, 78, 84, 91, 96, 104, 112, 152, 156, 168, 182, 208, 224, 228, 234, 247, 273, 304, 312, 336, 342, 364, 416, 456, 468, 494]),
            (0, -5): (0, [3, 6, 7, 8, 9, 12, 14, 18, 21, 24, 27, 28, 31, 36, 39, 42, 48, 52, 54, 56, 62, 63, 72, 78, 84, 91, 93, 104, 112, 117, 122, 124, 126, 144, 156, 168, 182, 183, 186, 189, 208, 217, 228, 234, 248, 252, 266, 273, 279, 312, 336, 342, 364, 366, 372, 378, 399, 403, 427, 434, 456, 468, 496]),
            (0, -4): (2, [2, 4, 8, 9, 11, 16, 18, 22, 72, 136, 272, 341, 342]),
            (0, -3): (2, [4, 8, 48, 72, 144]),
            (0, -2): (2, [2, 3, 4, 7, 11, 14, 21, 22, 42, 84]),
            (0, -1): (2, [8, 12, 16, 24, 48, 96, 296, 333, 444]),
            (0, 0): (0, [2, 4, 6, 8, 12, 13, 16, 24, 26, 32, 39, 41, 42, 48, 52, 56, 62, 63, 72, 78, 82, 84, 91, 93, 96, 104, 112, 117, 124, 126, 136, 144, 156, 168, 182, 186, 192, 204, 208, 217, 221, 234, 248, 252, 272, 273, 279, 312, 313, 336, 364, 372, 403, 408, 416, 426, 429, 434, 442, 451, 468, 481, 492, 496]),
            (0, 2): (2, [2, 4, 7, 14, 21, 22, 42, 84, 217]),
            (0, 3): (2, [8, 19, 29, 38, 48, 72, 144]),
            (0, 4): (2, [2, 3, 4, 8, 9, 16, 18, 19, 22, 27, 57, 72, 136, 171, 272, 342]),
            (0, 5): (0, [4, 7, 8, 9, 12, 14, 18, 19, 21, 24, 28, 31, 36, 38, 39, 42, 48, 52, 56, 62, 63, 72, 76, 78, 84, 91, 93, 104, 112, 117, 124, 126, 142, 144, 156, 168, 181, 182, 186, 208, 217, 228, 234, 248, 252, 266, 273, 279, 284, 312, 336, 341, 342, 362, 364, 372, 378, 399, 403, 434, 456, 468, 496]),
            (0, 7): (2, [3, 6, 8, 11, 12, 13, 16, 18, 24, 26, 39, 42, 48, 52, 56, 78, 84, 91, 96, 104, 112, 156, 168, 182, 208, 224, 228, 234, 247, 273, 304, 312, 336, 342, 364, 416, 456, 468, 494]),
            (0, 8): (2, [2, 4, 8, 16, 17, 32, 34, 39, 41, 48, 52, 68, 78, 82, 104, 136, 156, 208, 272, 312]),
            (1, -4): (2, [7, 11, 14, 28, 42, 56, 63, 72, 84, 126, 154, 168, 252]),
            (1, -1): (2, [19, 22, 44, 88]),
            (1, 9): (2, [4, 8, 24, 48]),
            (2, -1): (2, [13, 26, 39, 52, 72, 78, 104, 117, 156, 234, 312, 468, 481]),
            (2, 4): (2, [2, 4, 6, 12, 24]),
            (3, 4): (2, [3, 6, 9, 12, 18, 27, 36, 54, 72, 93, 186, 279, 333, 444]),
            (3, 8): (2, [12, 13, 19, 26, 38, 39, 42, 52, 56, 78, 84, 91, 104, 156, 168, 182, 228, 234, 247, 273, 312, 342, 364, 468, 494]),
            (4, 8): (2, [2, 4, 8, 16, 42, 56, 84, 168, 377]),
            (4, 11): (2, [8, 13, 26, 39, 48, 52, 72, 78, 104, 109, 117, 122, 144, 156, 208, 234, 296, 312, 468, 481]),
            (5, 15): (0, [11, 22, 24, 33, 44, 66, 71, 88, 124, 132, 142, 181, 213, 264, 284, 341, 362, 426, 429, 451, 492]),
            (6, 17): (2, [7, 12, 14, 21, 28, 42, 56, 84, 168, 217, 252, 434]),
        },
    },
    'p2_g3': {
        'p': 2, 'g': 3, 'n_max': 200, 'fix': {}, 'complete': True,
        'rows': {
            (-4, 9, -15): (3, [7, 11, 23, 29, 43, 71, 87, 113, 127]),
            (0, 1, -3): (3, [3, 9]),
            (-3, 2, 1): (3, [7, 11, 29, 43, 71, 87, 113, 127]),
            (0, 1, -1): (3, []),
            (-3, 5, -7): (3, []),
            (0, 1, 1): (3, []),
            (-3, 6, -9): (3, [3, 9, 27, 153]),
            (0, 1, 3): (3, [3, 9]),
            (-2, 0, 3): (3, [107, 149]),
            (0, 2, -2): (0, []),
            (-2, 1, 0): (2, [3, 5, 11, 55, 83]),
            (0, 2, -1): (3, [7]),
            (-2, 1, 1): (3, [3]),
            (0, 2, 1): (3, [7]),
            (-2, 2, -2): (0, [3, 9]),
            (0, 2, 2): (0, []),
            (-2, 2, -1): (3, [3]),
            (0, 3, -1): (3, [3, 89, 153]),
            (-2, 3, -6): (2, [73]),
            (0, 3, 1): (3, [3, 7, 89, 153]),
            (-2, 3, -5): (3, [3, 9, 27, 59, 63]),
            (1, -1, -5): (3, [3, 9]),
            (-2, 3, -3): (3, [5, 83, 131]),
            (1, -1, -4): (2, [3, 7, 49]),
            (-2, 4, -6): (0, [3]),
            (1, -1, -2): (2, [3, 9]),
            (-2, 5, -7): (3, [3, 7]),
            (1, 0, -3): (3, [7, 77, 103]),
            (-1, -1, 2): (2, [3, 9]),
            (1, 0, -1): (3, [5, 15]),
            (-1, -1, 4): (2, [3, 7]),
            (1, 0, 0): (1, []),
            (-1, -1, 5): (3, [3, 9]),
            (1, 0, 1): (3, [3]),
            (-1, 0, -1): (3, [3]),
            (1, 1, 0): (2, [3, 7]),
            (-1, 0, 0): (1, []),
            (1, 1, 1): (3, [3]),
            (-1, 0, 1): (3, [5, 15]),
            (1, 1, 3): (3, [3]),
            (-1, 0, 3): (3, [7, 77, 103]),
            (1, 2, 1): (3, [3, 5, 7, 9, 35, 75]),
            (-1, 1, -3): (3, [3]),
            (1, 2, 2): (1, [3]),
            (-1, 1, -1): (3, [3]),
            (1, 2, 3): (3, [3]),
            (-1, 1, 0): (2, [3, 7]),
            (1, 2, 5): (3, [3, 5]),
            (-1, 2, -5): (3, [3, 5]),
            (1, 3, 3): (3, [5, 25]),
            (-1, 2, -3): (3, [3]),
            (1, 4, 3): (3, [3, 83, 127]),
            (-1, 2, -2): (1, [3]),
            (2, 0, -3): (3, [107, 149]),
            (-1, 2, -1): (3, [3, 5, 7, 9, 35, 75]),
            (2, 1, -1): (3, [3]),
            (-1, 3, -3): (3, [5, 25]),
            (2, 1, 0): (2, [3, 5, 11, 55, 83]),
            (-1, 4, -3): (3, [3, 83, 127]),
            (2, 2, 1): (3, [3]),
            (0, -1, -2): (2, [73]),
            (2, 2, 2): (0, [3, 9]),
            (0, -1, -1): (3, []),
            (2, 3, 3): (3, [5, 83, 131]),
            (0, -1, 1): (3, []),
            (2, 3, 5): (3, [3, 9, 27, 59, 63]),
            (0, -1, 2): (2, [73]),
            (2, 3, 6): (2, [73]),
            (0, 0, -3): (3, [3, 7, 9, 13, 15, 21, 27, 29, 31, 35, 39, 45, 63, 65, 87, 91, 93, 105, 117, 123, 141, 151, 195]),
            (2, 4, 6): (0, [3]),
            (0, 0, -2): (0, [3, 7, 11, 15, 23, 29, 37, 45, 67, 71, 79]),
            (2, 5, 7): (3, [3, 7]),
            (0, 0, -1): (3, [3, 5, 7, 15, 19, 21, 25, 35, 45, 63, 71, 75, 95, 97, 105, 123, 133]),
            (3, 2, -1): (3, [7, 11, 23, 29, 43, 71, 87, 113, 127]),
            (0, 0, 1): (3, [3, 5, 7, 15, 19, 21, 25, 35, 45, 47, 49, 63, 75, 95, 97, 105, 123, 133]),
            (3, 5, 7): (3, [7]),
            (0, 0, 2): (0, [3, 7, 11, 15, 23, 29, 37, 45, 67]),
            (3, 6, 9): (3, [3, 9, 27, 153]),
            (0, 0, 3): (3, [3, 7, 9, 13, 15, 21, 27, 29, 31, 35, 39, 45, 47, 63, 65, 71, 87, 91, 93, 105, 117, 123, 141, 151, 195]),
            (4, 9, 15): (3, [7, 11, 29, 43, 71, 87, 113, 127]),
        },
    },
    'p3_g3_a5a4zero': {
        'p': 3, 'g': 3, 'n_max': 200, 'fix': {5: 0, 4: 0}, 'complete': False,
        'rows': {
            (0, 0, -9): (0, [2, 4, 7, 8, 13, 14, 19, 26, 28, 37, 38, 40, 52, 56, 65, 70, 73, 74, 76, 80, 91, 95, 104, 112, 122, 124, 130, 133, 140, 146, 148, 152, 182, 185, 190]),
            (0, 0, -7): (3, [2, 4, 5, 7, 8, 10, 11, 13, 14, 17, 19, 20, 22, 25, 26, 28, 35, 38, 40, 49, 56, 70, 76, 80, 85, 91, 112, 119, 133, 140, 145, 154, 175]),
            (0, 0, -6): (0, [2, 4, 8, 11, 13, 14, 16, 17, 19, 22, 26, 28, 34, 38, 40, 43, 44, 56, 68, 86, 112, 119, 136, 172]),
            (0, 0, -5): (3, [2, 4, 5, 7, 8, 11, 13, 14, 17, 23, 28, 37, 40, 56, 61, 70, 74, 80, 85, 112, 124, 140, 148, 154]),
            (0, 0, -4): (3, [2, 4, 8, 13, 14, 16, 26, 28, 32, 40, 52, 56, 65, 76, 80, 95, 104, 112, 116, 124, 130, 152, 190]),
            (0, 0, -3): (0, [2, 4, 5, 8, 10, 13, 20, 25, 31, 35, 40, 47, 67, 80, 124, 155]),
            (0, 0, -2): (3, [2, 4, 5, 7, 8, 10, 13, 14, 16, 17, 20, 25, 28, 34, 35, 40, 47, 50, 56, 68, 70, 80, 85, 100, 109, 136, 140, 160, 170]),
            (0, 0, -1): (3, [2, 4, 8, 11, 13, 19, 22, 26, 38, 40, 52, 65, 76, 79, 80, 104, 122, 130, 143, 193]),
            (0, 0, 1): (3, [2, 4, 8, 11, 13, 19, 23, 26, 38, 40, 47, 52, 65, 76, 79, 80, 104, 122, 130, 143, 193]),
            (0, 0, 2): (3, [2, 4, 5, 7, 8, 10, 14, 16, 17, 20, 25, 28, 34, 35, 40, 50, 56, 68, 70, 80, 85, 100, 109, 136, 140, 160, 170]),
            (0, 0, 3): (0, [2, 4, 5, 8, 10, 13, 20, 23, 25, 26, 31, 35, 40, 67, 80, 124, 155]),
            (0, 0, 4): (3, [2, 4, 8, 11, 13, 14, 16, 26, 28, 32, 40, 47, 52, 56, 65, 76, 80, 95, 104, 112, 116, 124, 130, 152, 190]),
            (0, 0, 5): (3, [2, 4, 5, 7, 8, 11, 13, 14, 17, 22, 26, 28, 37, 40, 56, 61, 70, 74, 80, 85, 109, 112, 124, 140, 148, 154]),
            (0, 0, 6): (0, [2, 4, 8, 11, 13, 14, 16, 17, 19, 22, 26, 28, 34, 38, 40, 43, 44, 56, 68, 86, 112, 119, 136, 172]),
            (0, 0, 7): (3, [2, 4, 5, 7, 8, 10, 13, 14, 17, 19, 20, 25, 28, 35, 38, 40, 49, 56, 70, 76, 80, 85, 91, 112, 119, 133, 140, 145, 154, 175]),
            (0, 0, 9): (0, [2, 4, 7, 8, 13, 14, 19, 26, 28, 37, 38, 40, 52, 56, 65, 70, 73, 74, 76, 80, 91, 95, 104, 112, 122, 124, 130, 133, 140, 146, 148, 152, 182, 185, 190]),
        },
    },
    'p5_g3_a5a4zero': {
        'p': 5, 'g': 3, 'n_max': 200, 'fix': {5: 0, 4: 0}, 'complete': False,
        'rows': {
            (0, 0, -21): (3, [3, 4, 6, 7, 8, 9, 12, 14, 16, 18, 19, 21, 24, 28, 36, 38, 42, 48, 49, 51, 56, 57, 63, 72, 76, 84, 108, 112, 114, 119, 126, 133, 144, 147, 152, 168, 171, 189]),
            (0, 0, -20): (0, [2, 4, 8, 12, 16, 24, 26, 42, 48, 51, 52, 56, 68, 84, 96, 102, 104, 109, 112, 119, 136, 168]),
            (0, 0, -19): (3, [4, 7, 8, 11, 14, 16, 19, 26, 28, 29, 31, 37, 38, 44, 52, 56, 74, 76, 91, 104, 112, 133, 148, 152, 163, 182]),
            (0, 0, -17): (3, [4, 8, 11, 13, 16, 26, 39, 52, 76, 91, 93, 104, 109, 143, 152]),
            (0, 0, -16): (3, [2, 4, 7, 8, 11, 12, 14, 16, 22, 24, 26, 28, 31, 48, 52, 56, 71, 88, 91, 96, 104, 142, 164, 182]),
            (0, 0, -15): (0, [3, 4, 6, 8, 9, 12, 16, 18, 24, 36, 37, 48, 72, 74, 108, 111, 144, 148]),
            (0, 0, -13): (3, [4, 8, 9, 13, 16, 31, 39, 51, 63, 76, 91, 117, 119, 152, 153]),
            (0, 0, -12): (3, [2, 3, 4, 6, 7, 8, 9, 12, 14, 16, 18, 19, 21, 24, 28, 31, 36, 38, 42, 48, 51, 56, 57, 62, 63, 68, 72, 76, 84, 93, 96, 102, 114, 124, 126, 133, 136, 138, 152, 168, 171, 186, 189]),
            (0, 0, -11): (3, [4, 8, 16, 19, 38, 61, 76, 152]),
            (0, 0, -10): (0, [2, 4, 8, 12, 24, 26, 29, 42, 48, 51, 52, 56, 58, 68, 84, 102, 112, 119, 136, 168]),
            (0, 0, -9): (3, [3, 4, 6, 7, 8, 9, 12, 13, 14, 16, 18, 21, 24, 26, 27, 28, 36, 38, 39, 42, 48, 52, 54, 56, 63, 72, 78, 81, 84, 91, 104, 108, 112, 117, 123, 126, 144, 156, 162, 168, 182, 189]),
            (0, 0, -8): (3, [2, 4, 8, 11, 12, 16, 22, 24, 31, 42, 48, 56, 62, 84, 88, 93, 96, 112, 124, 134, 168, 186]),
            (0, 0, -7): (3, [4, 7, 8, 14, 16, 19, 21, 26, 28, 29, 31, 38, 49, 51, 52, 56, 62, 76, 91, 104, 112, 119, 124, 133, 152, 161, 163, 182]),
            (0, 0, -6): (3, [2, 3, 4, 6, 8, 9, 11, 12, 18, 19, 22, 24, 26, 31, 33, 36, 39, 42, 48, 52, 56, 57, 66, 78, 84, 112, 114, 117, 132, 156, 168, 171]),
            (0, 0, -5): (0, [4, 7, 8, 9, 11, 14, 16, 28, 43, 51, 56, 93, 112, 153]),
            (0, 0, -3): (3, [3, 4, 6, 8, 9, 11, 12, 16, 18, 24, 26, 31, 33, 36, 38, 39, 43, 48, 51, 52, 62, 72, 76, 78, 79, 104, 108, 117, 119, 123, 124, 129, 144, 156, 181]),
            (0, 0, -2): (3, [2, 4, 7, 8, 12, 14, 19, 24, 28, 48, 133, 164]),
            (0, 0, -1): (3, [4, 8, 16, 29, 31, 62, 124, 127]),
            (0, 0, 1): (3, [4, 8, 16, 29, 31, 62, 124, 127]),
            (0, 0, 2): (3, [2, 4, 7, 8, 12, 14, 24, 28, 48, 133, 164]),
            (0, 0, 3): (3, [3, 4, 6, 8, 9, 11, 12, 16, 18, 24, 26, 33, 36, 39, 43, 48, 51, 52, 72, 78, 104, 108, 117, 119, 123, 129, 144, 156, 181]),
            (0, 0, 5): (0, [4, 7, 8, 9, 11, 14, 16, 28, 43, 51, 56, 93, 112, 153, 191]),
            (0, 0, 6): (3, [2, 3, 4, 6, 8, 9, 11, 12, 18, 22, 24, 26, 33, 36, 39, 42, 48, 52, 56, 57, 66, 78, 79, 84, 112, 114, 117, 132, 156, 168, 171]),
            (0, 0, 7): (3, [4, 7, 8, 14, 16, 19, 21, 26, 28, 29, 38, 49, 51, 52, 56, 76, 91, 104, 112, 119, 133, 152, 161, 163, 182]),
            (0, 0, 8): (3, [2, 4, 8, 11, 12, 16, 19, 22, 24, 31, 42, 48, 56, 62, 84, 88, 93, 96, 112, 124, 134, 168, 186]),
            (0, 0, 9): (3, [3, 4, 6, 7, 8, 9, 12, 13, 14, 16, 18, 21, 24, 26, 27, 28, 36, 39, 42, 44, 48, 52, 54, 56, 63, 72, 78, 81, 84, 91, 104, 108, 112, 117, 123, 126, 144, 156, 162, 168, 182, 189]),
            (0, 0, 10): (0, [2, 4, 8, 12, 24, 26, 29, 42, 48, 51, 52, 56, 58, 68, 84, 102, 112, 119, 136, 168]),
            (0, 0, 11): (3, [4, 8, 16, 61, 76, 152]),
            (0, 0, 12): (3, [2, 3, 4, 6, 7, 8, 9, 12, 14, 16, 18, 19, 21, 24, 28, 31, 36, 38, 42, 48, 51, 56, 57, 62, 63, 68, 72, 76, 84, 93, 96, 102, 114, 124, 126, 133, 136, 138, 152, 168, 171, 186, 189]),
            (0, 0, 13): (3, [4, 8, 9, 13, 16, 19, 31, 38, 39, 51, 62, 63, 76, 91, 117, 119, 124, 152, 153]),
            (0, 0, 15): (0, [3, 4, 6, 8, 9, 12, 16, 18, 24, 31, 36, 37, 48, 62, 72, 74, 108, 111, 144, 148, 191]),
            (0, 0, 16): (3, [2, 4, 7, 8, 11, 12, 14, 16, 22, 24, 26, 28, 48, 52, 56, 71, 88, 91, 96, 104, 142, 164, 182]),
            (0, 0, 17): (3, [4, 8, 11, 13, 16, 19, 26, 38, 39, 44, 52, 76, 79, 91, 93, 104, 109, 143, 152]),
            (0, 0, 19): (3, [4, 7, 8, 11, 14, 16, 19, 26, 28, 29, 31, 37, 38, 52, 56, 62, 74, 76, 79, 91, 104, 112, 133, 148, 152, 163, 182]),
            (0, 0, 20): (0, [2, 4, 8, 12, 16, 24, 26, 42, 48, 51, 52, 56, 68, 84, 96, 102, 104, 109, 112, 119, 136, 168]),
            (0, 0, 21): (3, [3, 4, 6, 7, 8, 9, 12, 14, 16, 18, 21, 24, 28, 36, 42, 48, 49, 51, 56, 57, 63, 72, 76, 84, 108, 112, 114, 119, 126, 133, 144, 147, 152, 168, 171, 189]),
        },
    },
    'p2_g4_a7a6zero': {
        'p': 2, 'g': 4, 'n_max': 100, 'fix': {7: 0, 6: 0}, 'complete': False,
        'rows': {
            (0, 0, -3, 1): (4, [3, 9, 27]),
            (0, 0, -2, -2): (0, [3]),
            (0, 0, -2, -1): (4, [11]),
            (0, 0, -2, 0): (0, []),
            (0, 0, -2, 2): (0, []),
            (0, 0, -2, 3): (4, []),
            (0, 0, -1, -5): (4, [3, 29]),
            (0, 0, -1, -4): (3, []),
            (0, 0, -1, -3): (4, []),
            (0, 0, -1, -1): (4, []),
            (0, 0, -1, 1): (4, [3]),
            (0, 0, -1, 2): (3, []),
            (0, 0, -1, 3): (4, [17]),
            (0, 0, -1, 5): (4, []),
            (0, 0, 0, -7): (4, [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 31, 33, 39, 47, 51, 53, 55, 57, 61, 63, 85, 93]),
            (0, 0, 0, -6): (0, [3, 5, 9, 11, 15, 17, 23, 25, 27, 29, 33, 35, 37, 43, 45, 51, 53, 55, 65, 67, 69, 85, 87, 91, 99]),
            (0, 0, 0, -5): (4, [3, 5, 7, 9, 11, 15, 17, 21, 25, 27, 33, 35, 39, 41, 43, 45, 47, 51, 55, 61, 63, 79, 81, 85, 99]),
            (0, 0, 0, -3): (4, [3, 5, 7, 9, 13, 15, 17, 21, 27, 31, 35, 39, 41, 43, 49, 51, 63, 83, 89, 91, 93]),
            (0, 0, 0, -2): (0, [3, 5, 7, 9, 15, 17, 19, 21, 23, 25, 27, 31, 39, 45, 47, 51, 53, 57, 79, 83, 93]),
            (0, 0, 0, 0): (0, [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 25, 27, 29, 31, 33, 35, 37, 39, 41, 43, 45, 51, 53, 55, 57, 63, 65, 69, 73, 75, 85, 87, 89, 91, 93, 95, 97, 99]),
            (0, 0, 0, 1): (4, [3, 5, 9, 11, 13, 15, 17, 23, 25, 27, 29, 31, 33, 35, 37, 39, 43, 45, 51, 53, 55, 57, 65, 75, 85, 87, 91, 95]),
            (0, 0, 0, 2): (0, [3, 5, 7, 9, 13, 15, 17, 19, 21, 23, 31, 39, 47, 51, 53, 57, 93]),
            (0, 0, 0, 3): (4, [3, 5, 7, 9, 13, 15, 17, 21, 25, 27, 31, 35, 39, 43, 49, 51, 59, 63, 71, 89, 91, 93, 95]),
            (0, 0, 0, 5): (4, [3, 5, 7, 9, 11, 15, 17, 21, 25, 27, 29, 33, 35, 41, 43, 45, 47, 51, 55, 59, 61, 63, 71, 81, 83, 85, 99]),
            (0, 0, 0, 6): (0, [3, 5, 7, 9, 11, 13, 15, 17, 23, 25, 27, 29, 33, 35, 37, 43, 45, 51, 53, 55, 65, 69, 71, 79, 85, 87, 91, 99]),
            (0, 0, 1, -5): (4, [3, 29]),
            (0, 0, 1, -4): (3, []),
            (0, 0, 1, -3): (4, []),
            (0, 0, 1, -1): (4, []),
            (0, 0, 1, 1): (4, [3]),
            (0, 0, 1, 2): (3, []),
            (0, 0, 1, 3): (4, [17]),
            (0, 0, 1, 5): (4, []),
            (0, 0, 2, -2): (0, [3]),
            (0, 0, 2, -1): (4, [11]),
            (0, 0, 2, 0): (0, []),
            (0, 0, 2, 2): (0, []),
            (0, 0, 2, 3): (4, []),
        },
    },
}
