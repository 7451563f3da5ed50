#pragma once

#include <array>
#include <string_view>

namespace msfuzzy::fixtures {

/// Four-element de Morgan algebra with the fixed fuzzy filter relative to {0, b}.
inline constexpr std::string_view diamond = R"ms(# Four-element de Morgan algebra: a and b are fixed by the negation.
[elements]
0 a b 1

[covers]
0 < a
0 < b
a < 1
b < 1

[neg]
0 -> 1
a -> a
b -> b
1 -> 0

[fuzzy chi]
0 = 0.5
a = 1
b = 0.5
1 = 1

[subset W]
0 b
)ms";

/// Seven-element algebra with negation and grades as printed; both are invalid.
inline constexpr std::string_view example4_printed = R"ms(# Seven-element lattice with the negation and grades exactly as printed.
# The table breaks z <= z°° and the grades break chi(u ∧ 1) = chi(u) ∧ chi(1).
[elements]
0 t x y z u 1

[covers]
0 < t
t < x
t < y
x < z
y < z
z < u
u < 1

[neg]
0 -> 1
t -> u
x -> t
y -> u
z -> u
u -> y
1 -> 0

[fuzzy chi]
0 = 0
t = 0.6
x = 0.6
y = 0.6
z = 0.7
u = 0.8
1 = 0.7

[subset W]
y
)ms";

/// As example4_printed with chi(1) = 1.
inline constexpr std::string_view example4_corrected = R"ms(# Seven-element lattice with the printed negation and chi(1) raised to 1.
# The negation table still breaks z <= z°°; chi is a fuzzy filter.
[elements]
0 t x y z u 1

[covers]
0 < t
t < x
t < y
x < z
y < z
z < u
u < 1

[neg]
0 -> 1
t -> u
x -> t
y -> u
z -> u
u -> y
1 -> 0

[fuzzy chi]
0 = 0
t = 0.6
x = 0.6
y = 0.6
z = 0.7
u = 0.8
1 = 1

[subset W]
y
)ms";

/// Three-element Stone algebra.
inline constexpr std::string_view chain3_stone = R"ms(# Three-element Stone algebra 0 < m < 1 with m° = 0.
[elements]
0 m 1

[covers]
0 < m
m < 1

[neg]
0 -> 1
m -> 0
1 -> 0

[fuzzy chi]
0 = 0
m = 1/2
1 = 1

[subset W]
m
)ms";

/// Two-element Boolean algebra.
inline constexpr std::string_view chain2 = R"ms(# Two-element Boolean algebra.
[elements]
0 1

[covers]
0 < 1

[neg]
0 -> 1
1 -> 0

[fuzzy chi]
0 = 0
1 = 1

[subset W]
0
)ms";

struct NamedFixture {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::array<NamedFixture, 5> all{{
    {"diamond", diamond},
    {"example4_printed", example4_printed},
    {"example4_corrected", example4_corrected},
    {"chain3_stone", chain3_stone},
    {"chain2", chain2},
}};

}  // namespace msfuzzy::fixtures
