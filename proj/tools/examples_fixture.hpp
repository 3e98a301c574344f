#pragma once

// Vendored rendering of the 2x2 and 3x3 deformation table. The examples
// subcommand regenerates the table from the pattern engine and diffs against
// this fixture, so any pattern regression breaks the command.
inline const char* const kExamplesFixture = R"FIXTURE(simplest deformations A_can + D, all 2x2 and 3x3 congruence canonical forms
(left: A_can, right: the deformation pattern D; stars are the parameters)

-- 2x2 --

[ 1] J1 + J1   (codim 4)
     0 0  |  * *
     0 0  |  * *

[ 2] G1 + J1   (codim 2)
     1 0  |  0 0
     0 0  |  * *

[ 3] G1 + G1   (codim 1)
     1 0  |  0 0
     0 1  |  * 0

[ 4] H1(-1)   (codim 3)
      0  1  |  * 0
     -1  0  |  * *

[ 5] H1(λ), λ ≠ 0, ±1   (codim 1)
     0 1  |  0 0
     λ 0  |  * 0

[ 6] G2   (codim 1)
      0 -1  |  * 0
      1  1  |  0 0


-- 3x3 --

[ 7] J1 + J1 + J1   (codim 9)
     0 0 0  |  * * *
     0 0 0  |  * * *
     0 0 0  |  * * *

[ 8] G1 + J1 + J1   (codim 6)
     1 0 0  |  0 0 0
     0 0 0  |  * * *
     0 0 0  |  * * *

[ 9] G1 + G1 + J1   (codim 4)
     1 0 0  |  0 0 0
     0 1 0  |  * 0 0
     0 0 0  |  * * *

[10] G1 + G1 + G1   (codim 3)
     1 0 0  |  0 0 0
     0 1 0  |  * 0 0
     0 0 1  |  * * 0

[11] H1(-1) + J1   (codim 6)
      0  1  0  |  * 0 0
     -1  0  0  |  * * 0
      0  0  0  |  * * *

[12] H1(λ) + J1, λ ≠ 0, ±1   (codim 4)
     0 1 0  |  0 0 0
     λ 0 0  |  * 0 0
     0 0 0  |  * * *

[13] J2 + J1   (codim 4)
     0 1 0  |  0 0 0
     0 0 0  |  * 0 *
     0 0 0  |  * 0 *

[14] G2 + J1   (codim 4)
      0 -1  0  |  * 0 0
      1  1  0  |  0 0 0
      0  0  0  |  * * *

[15] H1(-1) + G1   (codim 3)
      0  1  0  |  * 0 0
     -1  0  0  |  * * 0
      0  0  1  |  0 0 0

[16] H1(μ) + G1, μ ≠ ±1   (codim 1)
     0 1 0  |  0 0 0
     μ 0 0  |  * 0 0
     0 0 1  |  0 0 0

[17] G2 + G1   (codim 1)
      0 -1  0  |  * 0 0
      1  1  0  |  0 0 0
      0  0  1  |  0 0 0

[18] J3   (codim 2)
     0 1 0  |  0 0 0
     0 0 1  |  0 0 0
     0 0 0  |  * 0 *

[19] G3   (codim 1)
      0  0  1  |  0 0 0
      0 -1 -1  |  * 0 0
      1  1  0  |  0 0 0

)FIXTURE";
