#pragma once

// Reference tables for the three-member economy (1000, 2000, 3000; UD 200;
// c = 1/10), one row per period: P1, P2, P3, M, M/N, DU.

#include <array>
#include <string_view>

namespace rtm::testdata {

inline constexpr std::array<std::array<std::string_view, 6>, 20> kQuotativeTable{{
    {"1000", "2000", "3000", "6000", "2000", "200"},
    {"1200", "2200", "3200", "6600", "2200", "220"},
    {"1420", "2420", "3420", "7260", "2420", "242"},
    {"1662", "2662", "3662", "7986", "2662", "266"},
    {"1928", "2928", "3928", "8785", "2928", "293"},
    {"2221", "3221", "4221", "9663", "3221", "322"},
    {"2543", "3543", "4543", "10629", "3543", "354"},
    {"2897", "3897", "4897", "11692", "3897", "390"},
    {"3287", "4287", "5287", "12862", "4287", "429"},
    {"3716", "4716", "5716", "14148", "4716", "472"},
    {"4187", "5187", "6187", "15562", "5187", "519"},
    {"4706", "5706", "6706", "17119", "5706", "571"},
    {"5277", "6277", "7277", "18831", "6277", "628"},
    {"5905", "6905", "7905", "20714", "6905", "690"},
    {"6595", "7595", "8595", "22785", "7595", "759"},
    {"7354", "8354", "9354", "25063", "8354", "835"},
    {"8190", "9190", "10190", "27570", "9190", "919"},
    {"9109", "10109", "11109", "30327", "10109", "1011"},
    {"10120", "11120", "12120", "33360", "11120", "1112"},
    {"11232", "12232", "13232", "36695", "12232", "1223"},
}};

inline constexpr std::array<std::array<std::string_view, 6>, 20> kRelativeTable{{
    {"5.00", "10.00", "15.00", "30.00", "10.00", "1.00"},
    {"5.45", "10.00", "14.55", "30.00", "10.00", "1.00"},
    {"5.87", "10.00", "14.13", "30.00", "10.00", "1.00"},
    {"6.24", "10.00", "13.76", "30.00", "10.00", "1.00"},
    {"6.58", "10.00", "13.42", "30.00", "10.00", "1.00"},
    {"6.90", "10.00", "13.10", "30.00", "10.00", "1.00"},
    {"7.18", "10.00", "12.82", "30.00", "10.00", "1.00"},
    {"7.43", "10.00", "12.57", "30.00", "10.00", "1.00"},
    {"7.67", "10.00", "12.33", "30.00", "10.00", "1.00"},
    {"7.88", "10.00", "12.12", "30.00", "10.00", "1.00"},
    {"8.07", "10.00", "11.93", "30.00", "10.00", "1.00"},
    {"8.25", "10.00", "11.75", "30.00", "10.00", "1.00"},
    {"8.41", "10.00", "11.59", "30.00", "10.00", "1.00"},
    {"8.55", "10.00", "11.45", "30.00", "10.00", "1.00"},
    {"8.68", "10.00", "11.32", "30.00", "10.00", "1.00"},
    {"8.80", "10.00", "11.20", "30.00", "10.00", "1.00"},
    {"8.91", "10.00", "11.09", "30.00", "10.00", "1.00"},
    {"9.01", "10.00", "10.99", "30.00", "10.00", "1.00"},
    {"9.10", "10.00", "10.90", "30.00", "10.00", "1.00"},
    {"9.18", "10.00", "10.82", "30.00", "10.00", "1.00"},
}};

}  // namespace rtm::testdata
