// Ray coordinates for the built-in vector sets. Entries use the scalar literal
// syntax of parse_scalar_literal ("s2" is sqrt2, "i" the imaginary unit).

#include "catalog_data.hpp"

namespace kscontext::data {

// Peres, three-dimensional 33-ray set: permutations of (1,0,0), (0,1,+-1),
// (0,1,+-s2) and (+-1,+-1,s2).
const std::vector<std::string_view> kPeres33 = {
    "1,0,0", "0,1,0", "0,0,1", "0,1,1", "0,1,-1", "1,0,1",
    "1,0,-1", "1,1,0", "1,-1,0", "0,1,s2", "0,1,-s2", "0,s2,1",
    "0,s2,-1", "1,0,s2", "1,0,-s2", "s2,0,1", "s2,0,-1", "1,s2,0",
    "1,-s2,0", "s2,1,0", "s2,-1,0", "1,1,s2", "1,-1,s2", "-1,1,s2",
    "-1,-1,s2", "1,s2,1", "1,s2,-1", "-1,s2,1", "-1,s2,-1", "s2,1,1",
    "s2,1,-1", "s2,-1,1", "s2,-1,-1",
};

// Cabello, Estebaranz and Garcia-Alcaine 18-ray set in C^4 (nine bases).
const std::vector<std::string_view> kCabello18 = {
    "0,0,0,1", "0,0,1,0", "0,1,0,0", "1,1,0,0", "1,-1,0,0", "1,0,1,0",
    "1,0,-1,0", "1,0,0,1", "1,0,0,-1", "0,0,1,1", "0,1,0,-1", "0,1,-1,0",
    "1,-1,1,-1", "1,-1,-1,1", "1,1,1,1", "1,1,-1,1", "1,1,1,-1", "-1,1,1,1",
};

// Joint eigenbases of the six rows and columns of the Peres-Mermin square.
const std::vector<std::string_view> kPeresMermin24 = {
    "1,1,1,1", "1,-1,1,-1", "1,1,-1,-1", "1,-1,-1,1", "1,0,0,0", "0,0,1,0",
    "0,1,0,0", "0,0,0,1", "1,1,1,-1", "1,-1,1,1", "1,1,-1,1", "1,-1,-1,-1",
    "1,0,1,0", "0,1,0,1", "1,0,-1,0", "0,1,0,-1", "1,1,0,0", "0,0,1,1",
    "1,-1,0,0", "0,0,1,-1", "1,0,0,1", "0,1,1,0", "1,0,0,-1", "0,1,-1,0",
};

// Two-qubit stabilizer states, one ray per state.
const std::vector<std::string_view> kStabilizer2q = {
    "1,1,1,1", "1,1,-1,-1", "1,-1,1,-1", "1,-1,-1,1", "1,1,i,i", "1,1,-i,-i",
    "1,-1,i,-i", "1,-1,-i,i", "1,1,0,0", "0,0,1,1", "1,-1,0,0", "0,0,1,-1",
    "1,i,1,i", "1,i,-1,-i", "1,-i,1,-i", "1,-i,-1,i", "1,i,i,-1", "1,i,-i,1",
    "1,-i,i,1", "1,-i,-i,-1", "1,i,0,0", "0,0,1,i", "1,-i,0,0", "0,0,1,-i",
    "1,0,1,0", "1,0,-1,0", "0,1,0,1", "0,1,0,-1", "1,0,i,0", "1,0,-i,0",
    "0,1,0,i", "0,1,0,-i", "1,0,0,0", "0,0,1,0", "0,1,0,0", "0,0,0,1",
    "0,1,1,0", "1,0,0,1", "1,0,0,-1", "0,1,-1,0", "1,i,i,1", "1,-i,-i,1",
    "1,-i,i,-1", "1,i,-i,-1", "1,0,0,i", "0,1,-i,0", "0,1,i,0", "1,0,0,-i",
    "1,-1,i,i", "1,1,-i,i", "1,1,i,-i", "1,-1,-i,-i", "1,-i,1,i", "1,i,1,-i",
    "1,i,-1,i", "1,-i,-1,-i", "1,1,1,-1", "1,-1,1,1", "1,-1,-1,-1", "1,1,-1,1",
};

// E8 roots up to sign, scaled so entries are 0 or +-1 ('+', '-', '0').
const std::vector<std::string_view> kE8Signs = {
    "++000000", "+-000000", "+0+00000", "+0-00000", "+00+0000", "+00-0000", "+000+000", "+000-000",
    "+0000+00", "+0000-00", "+00000+0", "+00000-0", "+000000+", "+000000-", "0++00000", "0+-00000",
    "0+0+0000", "0+0-0000", "0+00+000", "0+00-000", "0+000+00", "0+000-00", "0+0000+0", "0+0000-0",
    "0+00000+", "0+00000-", "00++0000", "00+-0000", "00+0+000", "00+0-000", "00+00+00", "00+00-00",
    "00+000+0", "00+000-0", "00+0000+", "00+0000-", "000++000", "000+-000", "000+0+00", "000+0-00",
    "000+00+0", "000+00-0", "000+000+", "000+000-", "0000++00", "0000+-00", "0000+0+0", "0000+0-0",
    "0000+00+", "0000+00-", "00000++0", "00000+-0", "00000+0+", "00000+0-", "000000++", "000000+-",
    "++++++++", "++++++--", "+++++-+-", "+++++--+", "++++-++-", "++++-+-+", "++++--++", "++++----",
    "+++-+++-", "+++-++-+", "+++-+-++", "+++-+---", "+++--+++", "+++--+--", "+++---+-", "+++----+",
    "++-++++-", "++-+++-+", "++-++-++", "++-++---", "++-+-+++", "++-+-+--", "++-+--+-", "++-+---+",
    "++--++++", "++--++--", "++--+-+-", "++--+--+", "++---++-", "++---+-+", "++----++", "++------",
    "+-+++++-", "+-++++-+", "+-+++-++", "+-+++---", "+-++-+++", "+-++-+--", "+-++--+-", "+-++---+",
    "+-+-++++", "+-+-++--", "+-+-+-+-", "+-+-+--+", "+-+--++-", "+-+--+-+", "+-+---++", "+-+-----",
    "+--+++++", "+--+++--", "+--++-+-", "+--++--+", "+--+-++-", "+--+-+-+", "+--+--++", "+--+----",
    "+---+++-", "+---++-+", "+---+-++", "+---+---", "+----+++", "+----+--", "+-----+-", "+------+",
};

}  // namespace kscontext::data
