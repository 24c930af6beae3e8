#pragma once

#include <array>

namespace franklin {

/// Published reference values of the projection operator norms, rounded to
/// eight decimal places. Used as regression data by the verification suite.
struct ReferenceNorm {
    int N;
    int nu;
    const char* decimal;
};

inline constexpr std::array<ReferenceNorm, 109> reference_norms{{
    {2, 0, "1.66666667"},
    {3, 0, "1.77777778"},  {3, 1, "1.84444444"},
    {4, 0, "1.88888889"},  {4, 1, "2.00000000"},
    {5, 0, "1.94696970"},  {5, 1, "2.06951872"},  {5, 2, "1.99530864"},
    {6, 0, "1.96835017"},  {6, 1, "2.09951691"},  {6, 2, "2.03615841"},
    {7, 0, "1.98631436"},  {7, 1, "2.12227384"},  {7, 2, "2.05943912"},
    {7, 3, "2.03242817"},
    {8, 0, "1.99137719"},  {8, 1, "2.12904795"},  {8, 2, "2.06731688"},
    {8, 3, "2.05587710"},
    {9, 0, "1.99637151"},  {9, 1, "2.13550178"},  {9, 2, "2.07350359"},
    {9, 3, "2.06635304"},  {9, 4, "2.04175181"},
    {10, 0, "1.99767916"}, {10, 1, "2.13721808"}, {10, 2, "2.07535577"},
    {10, 3, "2.06916162"}, {10, 4, "2.06184314"},
    {11, 0, "1.99903054"}, {11, 1, "2.13897416"}, {11, 2, "2.07709926"},
    {11, 3, "2.07093598"}, {11, 4, "2.06877403"}, {11, 5, "2.04423294"},
    {12, 0, "1.99937738"}, {12, 1, "2.13942680"}, {12, 2, "2.07756643"},
    {12, 3, "2.07147842"}, {12, 4, "2.07063242"}, {12, 5, "2.06343762"},
    {13, 0, "1.99974043"}, {13, 1, "2.13989929"}, {13, 2, "2.07804184"},
    {13, 3, "2.07192928"}, {13, 4, "2.07140616"}, {13, 5, "2.06942343"},
    {13, 6, "2.04489705"},
    {14, 0, "1.99983312"}, {14, 1, "2.14002005"}, {14, 2, "2.07816469"},
    {14, 3, "2.07206051"}, {14, 4, "2.07160716"}, {14, 5, "2.07106530"},
    {14, 6, "2.06386325"},
    {15, 0, "1.99993046"}, {15, 1, "2.14014679"}, {15, 2, "2.07829271"},
    {15, 3, "2.07218617"}, {15, 4, "2.07173511"}, {15, 5, "2.07157865"},
    {15, 6, "2.06959951"}, {15, 7, "2.04507495"},
    {16, 0, "1.99995528"}, {16, 1, "2.14017911"}, {16, 2, "2.07832546"},
    {16, 3, "2.07221958"}, {16, 4, "2.07177393"}, {16, 5, "2.07171306"},
    {16, 6, "2.07118008"}, {16, 7, "2.06397716"},
    {17, 0, "1.99998137"}, {17, 1, "2.14021308"}, {17, 2, "2.07835981"},
    {17, 3, "2.07225375"}, {17, 4, "2.07180634"}, {17, 5, "2.07176873"},
    {17, 6, "2.07162518"}, {17, 7, "2.06964688"}, {17, 8, "2.04512262"},
    {18, 0, "1.99998802"}, {18, 1, "2.14022174"}, {18, 2, "2.07836857"},
    {18, 3, "2.07226256"}, {18, 4, "2.07181575"}, {18, 5, "2.07178315"},
    {18, 6, "2.07174416"}, {18, 7, "2.07121066"}, {18, 8, "2.06400767"},
    {19, 0, "1.99999501"}, {19, 1, "2.14023084"}, {19, 2, "2.07837778"},
    {19, 3, "2.07227176"}, {19, 4, "2.07182477"}, {19, 5, "2.07179234"},
    {19, 6, "2.07178110"}, {19, 7, "2.07163781"}, {19, 8, "2.06965959"},
    {19, 9, "2.04513539"},
    {20, 0, "1.99999679"}, {20, 1, "2.14023316"}, {20, 2, "2.07838012"},
    {20, 3, "2.07227411"}, {20, 4, "2.07182717"}, {20, 5, "2.07179513"},
    {20, 6, "2.07179076"}, {20, 7, "2.07175241"}, {20, 8, "2.07121883"},
    {20, 9, "2.06401584"},
}};

}  // namespace franklin
