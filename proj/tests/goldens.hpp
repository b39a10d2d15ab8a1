#pragma once

// High-precision reference values, frozen from an independent
// arbitrary-precision evaluation (mpmath at 80 decimal digits).

namespace goldens {

inline constexpr const char* kPhi =
    "1.61803398874989484820458683436563811772030917980576286213545";
inline constexpr const char* kPhiSq =
    "2.61803398874989484820458683436563811772030917980576286213545";
inline constexpr const char* kInvPhi =
    "0.618033988749894848204586834365638117720309179805762862135449";
inline constexpr const char* kInvPhiSq =
    "0.381966011250105151795413165634361882279690820194237137864551";
inline constexpr const char* kSqrt5 =
    "2.23606797749978969640917366873127623544061835961152572427090";
inline constexpr const char* kLn2 =
    "0.693147180559945309417232121458176568075500134360255254120680";
inline constexpr const char* kLn10 =
    "2.30258509299404568401799145468436420760110148862877297603333";
inline constexpr const char* kExp1 =
    "2.71828182845904523536028747135266249775724709369995957496697";
inline constexpr const char* kTwoPhiSq =  // 2^(phi^2)
    "6.13912901530595764292572330830316487643931590105565108926667";
inline constexpr const char* kFivePhiSq =  // 5^(phi^2)
    "67.5969698631836038593919352142067334998971086782303617052359";
inline constexpr const char* kTenPhiSq =  // 10^(phi^2)
    "414.986519033832852293719818353434114081868383571642259080310";
inline constexpr const char* kThreePhi =  // 3^phi
    "5.91559464172787621602231526514021291936688661726388405716242";
inline constexpr const char* kP3PowerSum =  // 2 + 2^(phi^2)
    "8.13912901530595764292572330830316487643931590105565108926667";
inline constexpr const char* kT42Rhs =  // 10^(phi^2) + 10*5^(phi^2) + 40
    "1130.9562176656688908876391704955014490808394703539";
inline constexpr const char* kStarArcRhs =  // phi^-2 + phi^-1 * 3^phi
    "4.038004563504689646252427139460551696943";

// ceil(a^(phi^i)) values.
struct CeilPower {
    int a;
    int i;
    const char* value;
};
inline constexpr CeilPower kCeilPowers[] = {
    {4, 0, "4"},       {4, 1, "10"},      {4, 2, "38"},
    {4, 3, "356"},     {4, 4, "13384"},   {4, 5, "4752779"},
    {8, 1, "29"},      {8, 2, "232"},     {8, 3, "6692"},
    {16, 1, "89"},     {16, 2, "1421"},   {16, 3, "126106"},
    {64, 1, "837"},    {64, 2, "53536"},  {64, 3, "44781760"},
    {64, 4, "2397406679978"},             {64, 5, "107360088413935712981"},
};

}  // namespace goldens
