// Generator matrices of the two published extremal doubly even [80,40,16]
// codes, transcribed from the octal figures. Row format: 13 octal digits,
// most significant 3-bit group first, then a=0 / b=1 for the last column.
// catalog.cpp verifies a checksum of this text before use.

namespace sdw::detail {

namespace {

const char kFigure1[] = R"(0040734771561a
4434543163675b
2602474666733b
1715423124350b
0352004645161a
3206160642302a
2660112641633b
6053127640067a
7431246537036b
4577441737365b
2663035540577b
1725203477272b
0346314420530a
4577753007251a
1114607163256a
4052516666522a
1346325653523b
7600030245123a
0463176442323a
4625262036154b
2706324200063a
5757747317034b
2373176750413a
5561262173200b
5513453515272b
2251030451530a
2247576744126b
6240715602721b
4243224261422a
6535307327614a
7642356744703a
7335772175344b
3142160261567a
5075665327676b
2022127744732a
2372131202427b
6216136061561a
0264135550102a
4526643473044a
1130243355350b
)";

const char kFigure2[] = R"(2017612646116b
1314312723575b
7122225026433b
4035272764050b
5472655005261a
6526731002002a
7140743001533b
4004001777410b
5466360400441a
6520567600712a
7143664300677b
4005452237172b
5466545260630a
1257102647151a
3143721054621b
6005430751155b
3311203764154a
2120661405223a
5343727202023a
6672344101523a
0751202337414b
0077116557334b
7453727110713a
7536344044677a
0233202355172b
0206116566147b
7567327104226b
3560144042421b
6214302356055b
3215556567514a
2162507104403a
2415123735044b
6662731421667a
7022743210201a
0075001673345b
7452760442727b
4241010156116b
2233013467575b
1206012233344a
4610412515050b
)";

}  // namespace

const char* figure_tokens(int which) { return which == 1 ? kFigure1 : kFigure2; }

}  // namespace sdw::detail
