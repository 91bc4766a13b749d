// Lebedev-Laikov generator tables (octahedral orbits), weights normalized to 1.
#include "lebedev_table.hpp"

namespace vmax::detail {

const std::vector<LebedevRule>& lebedev_rules() {
    static const std::vector<LebedevRule> rules = {
        {6, {
            {1, 1./6., 0, 0},
        }},
        {14, {
            {1, 2./30., 0, 0},
            {3, 3./40., 0, 0},
        }},
        {26, {
            {1, .04761904761904762, 0, 0},
            {2, .03809523809523810, 0, 0},
            {3, .03214285714285714, 0, 0},
        }},
        {38, {
            {1, .009523809523809524, 0, 0},
            {3, .03214285714285714, 0, 0},
            {5, .02857142857142857, .4597008433809831, 0},
        }},
        {50, {
            {1, .01269841269841270, 0, 0},
            {2, .02257495590828924, 0, 0},
            {3, .02109375000000000, 0, 0},
            {4, .02017333553791887, .3015113445777636, 0},
        }},
        {74, {
            {1, .00051306717973385, 0, 0},
            {2, .01660406956574204, 0, 0},
            {3, -.02958603896103896, 0, 0},
            {4, .02657620708215946, .4803844614152614, 0},
            {5, .01652217099371571, .3207726489807764, 0},
        }},
        {86, {
            {1, .01154401154401154, 0, 0},
            {3, .01194390908585628, 0, 0},
            {4, .01111055571060340, .3696028464541502, 0},
            {4, .01187650129453714, .6943540066026664, 0},
            {5, .01181230374690448, .3742430390903412, 0},
        }},
        {110, {
            {1, .003828270494937162, 0, 0},
            {3, .009793737512487512, 0, 0},
            {4, .008211737283191111, .1851156353447362, 0},
            {4, .009942814891178103, .6904210483822922, 0},
            {4, .009595471336070963, .3956894730559419, 0},
            {5, .009694996361663028, .4783690288121502, 0},
        }},
        {146, {
            {1, .5996313688621381E-3, 0, 0},
            {2, .7372999718620756E-2, 0, 0},
            {3, .7210515360144488E-2, 0, 0},
            {4, .7116355493117555E-2, .6764410400114264, 0},
            {4, .6753829486314477E-2, .4174961227965453, 0},
            {4, .7574394159054034E-2, .1574676672039082, 0},
            {6, .6991087353303262E-2, .1403553811713183, .4493328323269557},
        }},
        {170, {
            {1, .5544842902037365E-2, 0, 0},
            {2, .6071332770670752E-2, 0, 0},
            {3, .6383674773515093E-2, 0, 0},
            {4, .5183387587747790E-2, .2551252621114134, 0},
            {4, .6317929009813725E-2, .6743601460362766, 0},
            {4, .6201670006589077E-2, .4318910696719410, 0},
            {5, .5477143385137348E-2, .2613931360335988, 0},
            {6, .5968383987681156E-2, .4990453161796037, .1446630744325115},
        }},
        {194, {
            {1, .1782340447244611E-2, 0, 0},
            {2, .5716905949977102E-2, 0, 0},
            {3, .5573383178848738E-2, 0, 0},
            {4, .5608704082587997E-2, .6712973442695226, 0},
            {4, .5158237711805383E-2, .2892465627575439, 0},
            {4, .5518771467273614E-2, .4446933178717437, 0},
            {4, .4106777028169394E-2, .1299335447650067, 0},
            {5, .5051846064614808E-2, .3457702197611283, 0},
            {6, .5530248916233094E-2, .1590417105383530, .8360360154824589},
        }},
        {230, {
            {1, -.5522639919727325E-1, 0, 0},
            {3, .4450274607445226E-2, 0, 0},
            {4, .4496841067921404E-2, .4492044687397611, 0},
            {4, .5049153450478750E-2, .2520419490210201, 0},
            {4, .3976408018051883E-2, .6981906658447242, 0},
            {4, .4401400650381014E-2, .6587405243460960, 0},
            {4, .1724544350544401E-1, .0403854405009766, 0},
            {5, .4231083095357343E-2, .5823842309715584, 0},
            {5, .5198069864064399E-2, .3545877390518688, 0},
            {6, .4695720972568883E-2, .2272181808998187, .4864661535886647},
        }},
        {266, {
            {1, -.1313769127326952E-2, 0, 0},
            {2, -.2522728704859336E-2, 0, 0},
            {3, .4186853881700583E-2, 0, 0},
            {4, .5315167977810885E-2, .7039373391585475, 0},
            {4, .4047142377086219E-2, .1012526248572414, 0},
            {4, .4112482394406990E-2, .4647448726420539, 0},
            {4, .3595584899758782E-2, .3277420654971629, 0},
            {4, .4256131351428158E-2, .6620338663699974, 0},
            {5, .4229582700647240E-2, .8506508083520399, 0},
            {6, .4080914225780505E-2, .3233484542692899, .1153112011009701},
            {6, .4071467593830964E-2, .2314790158712601, .5244939240922365},
        }},
        {302, {
            {1, .8545911725128148E-3, 0, 0},
            {3, .3599119285025571E-2, 0, 0},
            {4, .3449788424305883E-2, .3515640345570105, 0},
            {4, .3604822601419882E-2, .6566329410219612, 0},
            {4, .3576729661743367E-2, .4729054132581005, 0},
            {4, .2352101413689164E-2, .0961830852261478, 0},
            {4, .3108953122413675E-2, .2219645236294178, 0},
            {4, .3650045807677255E-2, .7011766416089545, 0},
            {5, .2982344963171804E-2, .2644152887060663, 0},
            {5, .3600820932216460E-2, .5718955891878961, 0},
            {6, .3571540554273387E-2, .2510034751770465, .8000727494073951},
            {6, .3392312205006170E-2, .1233548532583327, .4127724083168531},
        }},
        {350, {
            {1, .3006796749453936E-2, 0, 0},
            {3, .3050627745650771E-2, 0, 0},
            {4, .1621104600288991E-2, .7068965463912316, 0},
            {4, .3005701484901752E-2, .4794682625712025, 0},
            {4, .2990992529653774E-2, .1927533154878019, 0},
            {4, .2982170644107595E-2, .6930357961327123, 0},
            {4, .2721564237310992E-2, .3608302115520091, 0},
            {4, .3033513795811141E-2, .6498486161496169, 0},
            {5, .3007949555218533E-2, .1932945013230339, 0},
            {5, .2881964603055307E-2, .3800494919899303, 0},
            {6, .2958357626535696E-2, .2899558825499574, .7934537856582315},
            {6, .3036020026407088E-2, .0968412145510396, .8280801506686862},
            {6, .2832187403926303E-2, .1833434647041659, .9074658265305127},
        }},
        {434, {
            {1, .5265897968224436E-3, 0, 0},
            {2, .2548219972002607E-2, 0, 0},
            {3, .2512317418927307E-2, 0, 0},
            {4, .2530403801186355E-2, .6909346307509111, 0},
            {4, .2014279020918528E-2, .1774836054609158, 0},
            {4, .2501725168402936E-2, .4914342637784746, 0},
            {4, .2513267174597564E-2, .6456664707424256, 0},
            {4, .2302694782227416E-2, .2861289010307638, 0},
            {4, .1462495621594614E-2, .0756808436717802, 0},
            {4, .2445373437312980E-2, .3927259763368002, 0},
            {5, .2417442375638981E-2, .8818132877794288, 0},
            {5, .1910951282179532E-2, .9776428111182649, 0},
            {6, .2416930044324775E-2, .2054823696403044, .8689460322872412},
            {6, .2512236854563495E-2, .5905157048925271, .7999278543857286},
            {6, .2496644054553086E-2, .5550152361076807, .7717462626915901},
            {6, .2236607760437849E-2, .9371809858553722, .3344363145343455},
        }},
        {590, {
            {1, .3095121295306187E-3, 0, 0},
            {3, .1852379698597489E-2, 0, 0},
            {4, .1871790639277744E-2, .7040954938227469, 0},
            {4, .1858812585438317E-2, .6807744066455244, 0},
            {4, .1852028828296213E-2, .6372546939258752, 0},
            {4, .1846715956151242E-2, .5044419707800358, 0},
            {4, .1818471778162769E-2, .4215761784010967, 0},
            {4, .1749564657281154E-2, .3317920736472123, 0},
            {4, .1617210647254411E-2, .2384736701421887, 0},
            {4, .1384737234851692E-2, .1459036449157763, 0},
            {4, .9764331165051050E-3, .0609503411550720, 0},
            {5, .1857161196774078E-2, .6116843442009876, 0},
            {5, .1705153996395864E-2, .3964755348199858, 0},
            {5, .1300321685886048E-2, .1724782009907724, 0},
            {6, .1842866472905286E-2, .5610263808622060, .3518280927733519},
            {6, .1802658934377451E-2, .4742392842551980, .2634716655937950},
            {6, .1849830560443660E-2, .5984126497885380, .1816640840360209},
            {6, .1713904507106709E-2, .3791035407695563, .1720795225656878},
            {6, .1555213603396808E-2, .2778673190586244, .0821302158193251},
            {6, .1802239128008525E-2, .5033564271075117, .0899920584207488},
        }},
        {770, {
            {1, .2192942088181184E-3, 0, 0},
            {2, .1436433617319080E-2, 0, 0},
            {3, .1421940344335877E-2, 0, 0},
            {4, .6798123511050502E-3, .0508720441050236, 0},
            {4, .9913184235294911E-3, .1228198790178831, 0},
            {4, .1180207833238949E-2, .2026890814408786, 0},
            {4, .1296599602080921E-2, .2847745156464294, 0},
            {4, .1365871427428316E-2, .3656719078978026, 0},
            {4, .1402988604775325E-2, .4428264886713469, 0},
            {4, .1418645563595609E-2, .5140619627249735, 0},
            {4, .1421376741851662E-2, .6306401219166803, 0},
            {4, .1423996475490962E-2, .6716883332022612, 0},
            {4, .1431554042178567E-2, .6979792685336881, 0},
            {5, .9254401499865368E-3, .1446865674195309, 0},
            {5, .1250239995053509E-2, .3390263475411216, 0},
            {5, .1394365843329230E-2, .5335804651263506, 0},
            {6, .1127089094671749E-2, .0694402439334941, .2355187894242326},
            {6, .1345753760910670E-2, .2269004109529460, .4102182474045730},
            {6, .1424957283316783E-2, .0802557460777534, .6214302417481605},
            {6, .1261523341237750E-2, .1467999527896572, .3245284345717394},
            {6, .1392547106052696E-2, .1571507769824727, .5224482189696630},
            {6, .1418761677877656E-2, .2365702993157246, .6017546634089558},
            {6, .1338366684479554E-2, .0771481586676573, .4346575516141163},
            {6, .1393700862676131E-2, .3062936666210730, .4908826589037616},
            {6, .1415914757466932E-2, .3822477379524787, .5648768149099500},
        }},
        {974, {
            {1, .1438294190527431E-3, 0, 0},
            {3, .1125772288287004E-2, 0, 0},
            {4, .4948029341949241E-3, .0429296354534135, 0},
            {4, .7357990109125470E-3, .1051426854086404, 0},
            {4, .8889132771304384E-3, .1750024867623087, 0},
            {4, .9888347838921435E-3, .2477653379650257, 0},
            {4, .1053299681709471E-2, .3206567123955957, 0},
            {4, .1092778807014578E-2, .3916520749849983, 0},
            {4, .1114389394063227E-2, .4590825874187624, 0},
            {4, .1123724788051555E-2, .5214563888415861, 0},
            {4, .1125239325243814E-2, .6253170244654199, 0},
            {4, .1126153271815905E-2, .6637926744523170, 0},
            {4, .1130286931123841E-2, .6910410398498301, 0},
            {4, .1134986534363955E-2, .7052907007457760, 0},
            {5, .6823367927109931E-3, .1236686762657990, 0},
            {5, .9454158160447096E-3, .2940777114468387, 0},
            {5, .1074429975385679E-2, .4697753849207649, 0},
            {5, .1129300086569132E-2, .6334563241139567, 0},
            {6, .8436884500901954E-3, .0597404861418134, .2029128752777523},
            {6, .1075255720448885E-2, .1375760408473636, .4602621942484054},
            {6, .1108577236864462E-2, .3391016526336286, .5030673999662036},
            {6, .9566475323783357E-3, .1271675191439820, .2817606422442134},
            {6, .1080663250717391E-2, .2693120740413512, .4331561291720157},
            {6, .1126797131196295E-2, .1419786452601918, .6256167358580814},
            {6, .1022568715358061E-2, .0670928460073826, .3798395216859157},
            {6, .1108960267713108E-2, .0705773818325617, .5517505421423520},
            {6, .1122790653435766E-2, .2783888477882155, .6029619156159187},
            {6, .1032401847117460E-2, .1979578938917407, .3589606329589096},
            {6, .1107249382283854E-2, .2087307061103274, .5348666438135476},
            {6, .1121780048519972E-2, .4055122137872836, .5674997546074373},
        }},
        {1202, {
            {1, .1105189233267572E-3, 0, 0},
            {2, .9205232738090741E-3, 0, 0},
            {3, .9133159786443561E-3, 0, 0},
            {4, .3690421898017899E-3, .0371263644965709, 0},
            {4, .5603990928680660E-3, .0914006041226222, 0},
            {4, .6865297629282609E-3, .1531077852469906, 0},
            {4, .7720338551145630E-3, .2180928891660612, 0},
            {4, .8301545958894795E-3, .2839874532200175, 0},
            {4, .8686692550179628E-3, .3491177600963764, 0},
            {4, .8927076285846890E-3, .4121431461444309, 0},
            {4, .9060820238568219E-3, .4718993627149127, 0},
            {4, .9119777254940867E-3, .5273145452842337, 0},
            {4, .9128720138604181E-3, .6209475332444019, 0},
            {4, .9130714935691735E-3, .6569722711857291, 0},
            {4, .9152873784554116E-3, .6841788309070143, 0},
            {4, .9187436274321654E-3, .7012604330123631, 0},
            {5, .5176977312965694E-3, .1072382215478166, 0},
            {5, .7331143682101417E-3, .2582068959496968, 0},
            {5, .8463232836379928E-3, .4172752955306717, 0},
            {5, .9031122694253992E-3, .5700366911792503, 0},
            {6, .6485778453163257E-3, .9827986018263947, .1771774022615325},
            {6, .7435030910982369E-3, .9624249230326228, .2475716463426288},
            {6, .7998527891839054E-3, .9402007994128811, .3354616289066489},
            {6, .8101731497468018E-3, .9320822040143202, .3173615246611977},
            {6, .8483389574594330E-3, .9043674199393299, .4090268427085357},
            {6, .8556299257311812E-3, .8912407560074747, .3854291150669224},
            {6, .8803208679738260E-3, .8676435628462708, .4932221184851285},
            {6, .8811048182425720E-3, .8581979986041619, .4785320675922435},
            {6, .8850282341265444E-3, .8396753624049856, .4507422593157064},
            {6, .9021342299040653E-3, .8165288564022188, .5632123020762100},
            {6, .9010091677105086E-3, .8015469370783529, .5434303569693900},
            {6, .9022692938426915E-3, .7773563069070351, .5123518486419871},
            {6, .9158016174693465E-3, .7661621213900394, .6394279634749102},
            {6, .9131578003189435E-3, .7553584143533510, .6269805509024392},
            {6, .9107813579482705E-3, .7344305757559503, .6031161693096310},
            {6, .9105760258970126E-3, .7043837184021765, .5693702498468441},
        }},
        {1454, {
            {1, .7777160743261247E-4, 0, 0},
            {3, .7557646413004701E-3, 0, 0},
            {4, .2841633806090617E-3, .0322929066341385, 0},
            {4, .4374419127053555E-3, .0803673327146222, 0},
            {4, .5417174740872172E-3, .1354289960531653, 0},
            {4, .6148000891358593E-3, .1938963861114426, 0},
            {4, .6664394485800704E-3, .2537343715011275, 0},
            {4, .7025039356923220E-3, .3135251434752570, 0},
            {4, .7268511789249627E-3, .3721558339375338, 0},
            {4, .7422637534208629E-3, .4286809575195696, 0},
            {4, .7509545035841214E-3, .4822510128282994, 0},
            {4, .7548535057718401E-3, .5320679333566263, 0},
            {4, .7554088969774001E-3, .6172998195394274, 0},
            {4, .7553147174442808E-3, .6510679849127481, 0},
            {4, .7564767653292297E-3, .6777315251687360, 0},
            {4, .7587991808518730E-3, .6963109410648741, 0},
            {4, .7608261832033027E-3, .7058935009831749, 0},
            {5, .4021680447874916E-3, .9955546194091857, 0},
            {5, .5804871793945964E-3, .9734115901794209, 0},
            {5, .6792151955945159E-3, .9275693732388626, 0},
            {5, .7336741211286294E-3, .8568022422795103, 0},
            {5, .7581866300989608E-3, .7623495553719372, 0},
            {6, .7538257859800743E-3, .5707522908892223, .4387028039889501},
            {6, .7483517247053123E-3, .5196463388403083, .3858908414762617},
            {6, .7371763661112059E-3, .4646337531215351, .3301937372343854},
            {6, .7183448895756934E-3, .4063901697557691, .2725423573563777},
            {6, .6895815529822191E-3, .3456329466643087, .2139510237495250},
            {6, .6480105801792886E-3, .2831395121050332, .1555922309786647},
            {6, .5897558896594636E-3, .2197682022925330, .0989287897968610},
            {6, .5095708849247346E-3, .1564696098650355, .0459864291067551},
            {6, .7536906428909755E-3, .6027356673721295, .3376625140173426},
            {6, .7472505965575118E-3, .5496032320255096, .2822301309727988},
            {6, .7343017132279698E-3, .4921707755234567, .2248632342592540},
            {6, .7130871582177445E-3, .4309422998598483, .1666224723456479},
            {6, .6817022032112776E-3, .3664108182313672, .1086964901822169},
            {6, .6380941145604121E-3, .2990189057758436, .0525198978412008},
            {6, .7550381377920310E-3, .6268724013144998, .2297523657550023},
            {6, .7478646640144802E-3, .5707324144834607, .1723080607093800},
            {6, .7335918720601220E-3, .5096360901960365, .1140238465390513},
            {6, .7110120527658118E-3, .4438729938312456, .0561152209588254},
            {6, .7571363978689501E-3, .6419978471082389, .1164174423140873},
            {6, .7489908329079233E-3, .5817218061802611, .0579758953144522},
        }},
        {1730, {
            {1, .6309049437420976E-4, 0, 0},
            {2, .6398287705571748E-3, 0, 0},
            {3, .6357185073530719E-3, 0, 0},
            {4, .2221207162188168E-3, .0286092312619466, 0},
            {4, .3475784022286848E-3, .0714255676771152, 0},
            {4, .4350742443589804E-3, .1209199540995559, 0},
            {4, .4978569136522127E-3, .1738673106594379, 0},
            {4, .5435036221998053E-3, .2284645438467734, 0},
            {4, .5765913388219542E-3, .2834807671701512, 0},
            {4, .6001200359226003E-3, .3379680145467339, 0},
            {4, .6162178172717512E-3, .3911355454819537, 0},
            {4, .6265218152438484E-3, .4422860353001403, 0},
            {4, .6323987160974212E-3, .4907781568726057, 0},
            {4, .6350767851540569E-3, .5360006153211468, 0},
            {4, .6354362775297107E-3, .6142105973596603, 0},
            {4, .6352302462706236E-3, .6459300387977503, 0},
            {4, .6358117881417972E-3, .6718056125089225, 0},
            {4, .6373101590310116E-3, .6910888533186254, 0},
            {4, .6390428961368665E-3, .7030467416823252, 0},
            {5, .3186913449946576E-3, .0835495116635465, 0},
            {5, .4678028558591711E-3, .2050143009099486, 0},
            {5, .5538829697598626E-3, .3370208290706637, 0},
            {5, .6044475907190476E-3, .4689051484233963, 0},
            {5, .6313575103509012E-3, .5939400424557334, 0},
            {6, .4078626431855630E-3, .1394983311832261, .0409758116205034},
            {6, .4759933057812725E-3, .1967999180485014, .0885198739129335},
            {6, .5268151186413440E-3, .2546183732548967, .1397680182969819},
            {6, .5643048560507316E-3, .3121281074713875, .1929452542226526},
            {6, .5914501076613073E-3, .3685981078502492, .2467898337061562},
            {6, .6104561257874195E-3, .4233760321547856, .3003104124785409},
            {6, .6230252860707806E-3, .4758671236059246, .3526684328175033},
            {6, .6305618761760796E-3, .5255178579796463, .4031134861145713},
            {6, .6343092767597889E-3, .5718025633734589, .4509426448342351},
            {6, .5176268945737827E-3, .2686927772723415, .0471132250242325},
            {6, .5564840313313692E-3, .3306006819904809, .0978448730394269},
            {6, .5856426671038980E-3, .3904906850594983, .1505395810025273},
            {6, .6066386925777091E-3, .4479957951904390, .2039728156296050},
            {6, .6208824962234458E-3, .5027076848919780, .2571529941121107},
            {6, .6296314297822907E-3, .5542087392260217, .3092191375815670},
            {6, .6340423756791859E-3, .6020850887375186, .3593807506130276},
            {6, .5829627677107342E-3, .4019851409179594, .0506338993437867},
            {6, .6048693376081110E-3, .4635614567449800, .1032422269160612},
            {6, .6202362317732461E-3, .5215860931591575, .1566322094006254},
            {6, .6299005328403779E-3, .5758202499099271, .2098082827491099},
            {6, .6347722390609352E-3, .6259893683876795, .2618824114553391},
            {6, .6203778981238834E-3, .5313795124811891, .0526324501933856},
            {6, .6308414671239979E-3, .5893317955931995, .1061059730982005},
            {6, .6362706466959498E-3, .6426246321215801, .1594171564034221},
            {6, .6375414170333233E-3, .6511904367376113, .0535478953656554},
        }},
        {2030, {
            {1, .4656031899197431E-4, 0, 0},
            {3, .5421549195295507E-3, 0, 0},
            {4, .1778522133346553E-3, .0254083533681435, 0},
            {4, .2811325405682796E-3, .0639932280050492, 0},
            {4, .3548896312631459E-3, .1088269469804125, 0},
            {4, .4090310897173364E-3, .1570670798818287, 0},
            {4, .4493286134169965E-3, .2071163932282514, 0},
            {4, .4793728447962723E-3, .2578914044450844, 0},
            {4, .5015415319164265E-3, .3085687558169623, 0},
            {4, .5175127372677937E-3, .3584719706267024, 0},
            {4, .5285522262081019E-3, .4070135594428709, 0},
            {4, .5356832703713962E-3, .4536618626222638, 0},
            {4, .5397914736175170E-3, .4979195686463577, 0},
            {4, .5416899441599930E-3, .5393075111126999, 0},
            {4, .5419308476889938E-3, .6115617676843916, 0},
            {4, .5416936902030596E-3, .6414308435160159, 0},
            {4, .5419544338703164E-3, .6664099412721607, 0},
            {4, .5428983656630974E-3, .6859161771214913, 0},
            {4, .5442286500098193E-3, .6993625593503890, 0},
            {4, .5452250345057301E-3, .7062393387719380, 0},
            {5, .2568002497728530E-3, .0747902816834976, 0},
            {5, .3827211700292145E-3, .1848951153969366, 0},
            {5, .4579491561917824E-3, .3059529066581305, 0},
            {5, .5042003969083574E-3, .4285556101021362, 0},
            {5, .5312708889976024E-3, .5468758653496526, 0},
            {5, .5438401790747117E-3, .6565821978343439, 0},
            {6, .3316041873197344E-3, .1253901572367117, .0368191722643964},
            {6, .3899113567153771E-3, .1775721510383941, .0798248760721330},
            {6, .4343343327201309E-3, .2305693358216114, .1264640966592335},
            {6, .4679415262318919E-3, .2836502845992063, .1751585683418957},
            {6, .4930847981631031E-3, .3361794746232590, .2247995907632670},
            {6, .5115031867540091E-3, .3875979172264824, .2745299257422246},
            {6, .5245217148457367E-3, .4374019316999074, .3236373482441118},
            {6, .5332041499895321E-3, .4851275843340022, .3714967859436741},
            {6, .5384583126021542E-3, .5303391803806868, .4175353646321745},
            {6, .5411067210798852E-3, .5726197380596287, .4612084406355461},
            {6, .4259797391468714E-3, .2431520732564863, .0425804013304395},
            {6, .4604931368460021E-3, .3002096800895869, .0886942430672272},
            {6, .4871814878255202E-3, .3558554457457432, .1368811706510655},
            {6, .5072242910074885E-3, .4097782537048887, .1860739985015033},
            {6, .5217069845235350E-3, .4616337666067458, .2354235077395853},
            {6, .5315785966280310E-3, .5110707008417874, .2842074921347011},
            {6, .5376833708758905E-3, .5577415286163795, .3317784414984102},
            {6, .5408032092069521E-3, .6013060431366950, .3775299002040700},
            {6, .4842744917904866E-3, .3661596767261781, .0459936788716459},
            {6, .5048926076188130E-3, .4237633153506581, .0940489377365442},
            {6, .5202607980478373E-3, .4786328454658452, .1431377109091971},
            {6, .5309932388325743E-3, .5305702076789774, .1924186388843570},
            {6, .5377419770895208E-3, .5793436224231788, .2411590944775190},
            {6, .5411696331677717E-3, .6247069017094747, .2886871491583605},
            {6, .5197996293282420E-3, .4874315552535204, .0480497877495321},
            {6, .5311120836622945E-3, .5427337322059053, .0971685719936666},
            {6, .5384309319956951E-3, .5943493747246700, .1465205839795055},
            {6, .5421859504051886E-3, .6421314033564943, .1953579449803574},
            {6, .5390948355046314E-3, .6020628374713980, .0491637501573811},
            {6, .5433312705027845E-3, .6529222529856881, .0986162154012701},
        }},
        {2354, {
            {1, .3922616270665292E-4, 0, 0},
            {2, .4703831750854424E-3, 0, 0},
            {3, .4678202801282136E-3, 0, 0},
            {4, .1437832228979900E-3, .0229002464653059, 0},
            {4, .2303572493577644E-3, .0577908665227128, 0},
            {4, .2933110752447454E-3, .0986310357637598, 0},
            {4, .3402905998359838E-3, .1428155792982185, 0},
            {4, .3759138466870372E-3, .1888978116601463, 0},
            {4, .4030638447899798E-3, .2359091682970210, 0},
            {4, .4236591432242211E-3, .2831228833706171, 0},
            {4, .4390522656946746E-3, .3299495857966693, 0},
            {4, .4502523466626247E-3, .3758840802660796, 0},
            {4, .4580577727783541E-3, .4204751831009480, 0},
            {4, .4631391616615899E-3, .4633068518751051, 0},
            {4, .4660928953698676E-3, .5039849474507313, 0},
            {4, .4674751807936953E-3, .5421265793440747, 0},
            {4, .4676414903932920E-3, .6092660230557310, 0},
            {4, .4674086492347870E-3, .6374654204984869, 0},
            {4, .4674928539483207E-3, .6615136472609892, 0},
            {4, .4680748979686447E-3, .6809487285958127, 0},
            {4, .4690449806389040E-3, .6952980021665196, 0},
            {4, .4699877075860818E-3, .7041245497695400, 0},
            {5, .2099942281069176E-3, .0674403308830606, 0},
            {5, .3172269150712804E-3, .1678684485334166, 0},
            {5, .3832051358546523E-3, .2793559049539613, 0},
            {5, .4252193818146985E-3, .3935264218057639, 0},
            {5, .4513807963755000E-3, .5052629268232558, 0},
            {5, .4657797469114178E-3, .6107905315437531, 0},
            {6, .2733362800522836E-3, .1135081039843524, .0333195488466259},
            {6, .3235485368463559E-3, .1612866626099378, .0724716746543654},
            {6, .3624908726013453E-3, .2100786550168205, .1151539110849745},
            {6, .3925540070712828E-3, .2592282009459942, .1599491097143677},
            {6, .4156129781116235E-3, .3081740561320203, .2058699956028027},
            {6, .4330644984623263E-3, .3564289781578164, .2521624953502911},
            {6, .4459677725921312E-3, .4035587288240703, .2982090785797674},
            {6, .4551593004456795E-3, .4491671196373903, .3434762087235733},
            {6, .4613341462749918E-3, .4928854782917489, .3874831357203437},
            {6, .4651019618269806E-3, .5343646791958988, .4297814821746926},
            {6, .4670249536100625E-3, .5732683216530990, .4699402260943537},
            {6, .3549555576441708E-3, .2214131583218986, .0387360204064389},
            {6, .3856108245249010E-3, .2741796504750071, .0808949625690201},
            {6, .4098622845756882E-3, .3259797439149485, .1251732177620872},
            {6, .4286328604268950E-3, .3765441148826891, .1706260286403185},
            {6, .4427802198993945E-3, .4255773574530558, .2165115147300408},
            {6, .4530473511488561E-3, .4727795117058430, .2622089812225259},
            {6, .4600805475703138E-3, .5178546895819012, .3071721431296201},
            {6, .4644599059958017E-3, .5605141192097460, .3508998998801138},
            {6, .4667274455712508E-3, .6004763319352512, .3929160876166931},
            {6, .4069360518020356E-3, .3352842634946949, .0420256345728802},
            {6, .4260442819919195E-3, .3891971629814670, .0861430975887085},
            {6, .4408678508029063E-3, .4409875565542281, .1314500879380001},
            {6, .4518748115548597E-3, .4904893058592484, .1772189657383859},
            {6, .4595564875375116E-3, .5375056138769549, .2228277110050294},
            {6, .4643988774315846E-3, .5818255708669969, .2677179935014386},
            {6, .4668827491646946E-3, .6232334858144959, .3113675035544165},
            {6, .4400541823741973E-3, .4489485354492058, .0440916237836817},
            {6, .4514512890193797E-3, .5015136875933150, .0893900991774849},
            {6, .4596198627347549E-3, .5511300550512623, .1351806029383365},
            {6, .4648659016801781E-3, .5976720409858000, .1808370355053196},
            {6, .4675502017157673E-3, .6409956378989354, .2257852192301602},
            {6, .4598494476455523E-3, .5581222330827514, .0453217342163716},
            {6, .4654916955152048E-3, .6074705984161695, .0911748803184031},
            {6, .4684709779505137E-3, .6532272537379032, .1369294213140155},
            {6, .4691445539106986E-3, .6594761494500487, .0458990148727558},
        }},
        {2702, {
            {1, .2998675149888161E-4, 0, 0},
            {3, .4077860529495355E-3, 0, 0},
            {4, .1185349192520667E-3, .0206556253881870, 0},
            {4, .1913408643425751E-3, .0525091817302238, 0},
            {4, .2452886577209897E-3, .0899348008203838, 0},
            {4, .2862408183288702E-3, .1306023924436019, 0},
            {4, .3178032258257357E-3, .1732060388531418, 0},
            {4, .3422945667633690E-3, .2168727084820249, 0},
            {4, .3612790520235922E-3, .2609528309173586, 0},
            {4, .3758638229818521E-3, .3049252927938952, 0},
            {4, .3868711798859953E-3, .3483484138084404, 0},
            {4, .3949429933189938E-3, .3908321549106406, 0},
            {4, .4006068107541156E-3, .4320210071894814, 0},
            {4, .4043192149672723E-3, .4715824795890053, 0},
            {4, .4064947495808078E-3, .5091984794078454, 0},
            {4, .4075245619813152E-3, .5445580145650804, 0},
            {4, .4076423540893566E-3, .6072575796841768, 0},
            {4, .4074280862251555E-3, .6339484505755802, 0},
            {4, .4074163756012244E-3, .6570718257486958, 0},
            {4, .4077647795071246E-3, .6762557330090709, 0},
            {4, .4084517552782530E-3, .6911161696923790, 0},
            {4, .4092468459224052E-3, .7012841911659961, 0},
            {4, .4097872687240906E-3, .7064559272410020, 0},
            {5, .1738986811745028E-3, .0612355498989477, 0},
            {5, .2659616045280191E-3, .1533070348312393, 0},
            {5, .3240596008171533E-3, .2563902605244206, 0},
            {5, .3621195964432943E-3, .3629346991663361, 0},
            {5, .3868838330760539E-3, .4683949968987538, 0},
            {5, .4018911532693111E-3, .5694479240657953, 0},
            {5, .4089929432983252E-3, .6634465430993955, 0},
            {6, .2279907527706409E-3, .1033958573552305, .0303454400906358},
            {6, .2715205490578897E-3, .1473521412414395, .0661880304424713},
            {6, .3057917896703976E-3, .1924552158705967, .1054431128987715},
            {6, .3326913052452555E-3, .2381094362890328, .1468263551238858},
            {6, .3537334711890037E-3, .2838121707936760, .1894486108187886},
            {6, .3700567500783129E-3, .3291323133373415, .2326374238761579},
            {6, .3825245372589122E-3, .3736896978741460, .2758485808485768},
            {6, .3918125171518296E-3, .4171406040760013, .3186179331996921},
            {6, .3984720419937579E-3, .4591677985256915, .3605329796303794},
            {6, .4029746003338211E-3, .4994733831718418, .4012147253586509},
            {6, .4057428632156627E-3, .5377731830445096, .4403050025570692},
            {6, .4071719274114857E-3, .5737917830001331, .4774565904277483},
            {6, .2990236950664119E-3, .2027323586271389, .0354412250497615},
            {6, .3262951734212878E-3, .2516942375187273, .0741830438864633},
            {6, .3482634608242413E-3, .3000227995257181, .1150502745727186},
            {6, .3656596681700892E-3, .3474806691046342, .1571963371209364},
            {6, .3791740467794218E-3, .3938103180359209, .1999631877247100},
            {6, .3894034450156905E-3, .4387519590455703, .2428073457846535},
            {6, .3968600245508371E-3, .4820503960077787, .2852575132906155},
            {6, .4019931351420050E-3, .5234573778475101, .3268884208674639},
            {6, .4052108801278599E-3, .5627318647235282, .3673033321675939},
            {6, .4068978613940934E-3, .5996390607156954, .4061211551830290},
            {6, .3454275351319704E-3, .3084780753791947, .0386012552310006},
            {6, .3629963537007920E-3, .3589988275920223, .0792893898710487},
            {6, .3770187233889873E-3, .4078628415881973, .1212614643030087},
            {6, .3878608613694378E-3, .4549287258889735, .1638770827382693},
            {6, .3959065270221274E-3, .5000278512957279, .2065965798260176},
            {6, .4015286975463570E-3, .5429785044928199, .2489436378852235},
            {6, .4050866785614717E-3, .5835939850491711, .2904811368946891},
            {6, .4069320185051913E-3, .6216870353444856, .3307941957666609},
            {6, .3760120964062763E-3, .4151104662709091, .0406482914605255},
            {6, .3870969564418064E-3, .4649804275009218, .0825842454729476},
            {6, .3955287790534055E-3, .5124695757009662, .1251841962027289},
            {6, .4015361911302668E-3, .5574711100606224, .1679107505976331},
            {6, .4053836986719548E-3, .5998597333287227, .2102805057358715},
            {6, .4073578673299117E-3, .6395007148516600, .2518418087774107},
            {6, .3954628379231406E-3, .5188456224746252, .0419432167607752},
            {6, .4017645508847530E-3, .5664190707942778, .0845766155192150},
            {6, .4059030348651293E-3, .6110464353283153, .1273652932519396},
            {6, .4080565809484880E-3, .6526430302051563, .1698173239076354},
            {6, .4063018753664651E-3, .6167551880377548, .0426639885154886},
            {6, .4087191292799671E-3, .6607195418355383, .0855192581423835},
        }},
        {3074, {
            {1, .2599095953754734E-4, 0, 0},
            {2, .3603134089687541E-3, 0, 0},
            {3, .3586067974412447E-3, 0, 0},
            {4, .9831528474385880E-4, .0188610851872339, 0},
            {4, .1605023107954450E-3, .0480021724462530, 0},
            {4, .2072200131464099E-3, .0824492205839724, 0},
            {4, .2431297618814187E-3, .1200408362484023, 0},
            {4, .2711819064496707E-3, .1595773530809965, 0},
            {4, .2932762038321116E-3, .2002635973434064, 0},
            {4, .3107032514197368E-3, .2415127590139982, 0},
            {4, .3243808058921213E-3, .2828584158458477, 0},
            {4, .3349899091374030E-3, .3239091015338138, 0},
            {4, .3430580688505218E-3, .3643225097962194, 0},
            {4, .3490124109290343E-3, .4037897083691802, 0},
            {4, .3532148948561955E-3, .4420247515194127, 0},
            {4, .3559862669062833E-3, .4787572538464938, 0},
            {4, .3576224317551411E-3, .5137265251275234, 0},
            {4, .3584050533086076E-3, .5466764056654611, 0},
            {4, .3584903581373224E-3, .6054859420813535, 0},
            {4, .3582991879040586E-3, .6308106701764562, 0},
            {4, .3582371187963125E-3, .6530369230179583, 0},
            {4, .3584353631122350E-3, .6718609524611158, 0},
            {4, .3589120166517785E-3, .6869676499894013, 0},
            {4, .3595445704531601E-3, .6980467077240748, 0},
            {4, .3600943557111074E-3, .7048241721250522, 0},
            {5, .1456447096742039E-3, .0559110522205823, 0},
            {5, .2252370188283782E-3, .1407384078513916, 0},
            {5, .2766135443474897E-3, .2364035438976309, 0},
            {5, .3110729491500851E-3, .3360602737818170, 0},
            {5, .3342506712303391E-3, .4356292630054665, 0},
            {5, .3491981834026860E-3, .5321569415256174, 0},
            {5, .3576003604348932E-3, .6232956305040555, 0},
            {6, .1921921305788564E-3, .0946987008683847, .0277874838730947},
            {6, .2301458216495632E-3, .1353170300568141, .0607656987862836},
            {6, .2604248549522893E-3, .1771679481726077, .0970307276271104},
            {6, .2845275425870697E-3, .2197066664231751, .1354112458524762},
            {6, .3036870897974840E-3, .2624783557374927, .1750996479744100},
            {6, .3188414832298066E-3, .3050969521214442, .2154896907449802},
            {6, .3307046414722089E-3, .3472252637196021, .2560954625740152},
            {6, .3398330969031360E-3, .3885610219026360, .2965070050624096},
            {6, .3466757899705373E-3, .4288273776062765, .3363641488734497},
            {6, .3516095923230054E-3, .4677662471302948, .3753400029836788},
            {6, .3549645184048486E-3, .5051333589553360, .4131297522144286},
            {6, .3570415969441392E-3, .5406942145810492, .4494423776081795},
            {6, .3581251798496118E-3, .5742204122576458, .4839938958841502},
            {6, .2543491329913348E-3, .1865407027225188, .0325914485107080},
            {6, .2786711051330776E-3, .2321186453689432, .0683567950529734},
            {6, .2985552361083679E-3, .2773159142523882, .1062284864451989},
            {6, .3145867929154039E-3, .3219200192237254, .1454404409323047},
            {6, .3273290662067609E-3, .3657032593944029, .1854018282582510},
            {6, .3372705511943501E-3, .4084376778363622, .2256297412014750},
            {6, .3448274437851510E-3, .4499004945751427, .2657104425000896},
            {6, .3503592783048583E-3, .4898758141326335, .3052755487631557},
            {6, .3541854792663162E-3, .5281547442266309, .3439863920645423},
            {6, .3565995517909428E-3, .5645346989813992, .3815229456121914},
            {6, .3578802078302898E-3, .5988181252159848, .4175752420966734},
            {6, .2958644592860982E-3, .2850425424471603, .0356214950986254},
            {6, .3119548129116835E-3, .3324619433027876, .0733031888687110},
            {6, .3250745225005984E-3, .3785848333076282, .1123226296008472},
            {6, .3355153415935208E-3, .4232891028562115, .1521084193337708},
            {6, .3435847568549328E-3, .4664287050829722, .1921844459223610},
            {6, .3495786831622488E-3, .5078458493735726, .2321360989678303},
            {6, .3537767805534621E-3, .5473779816204180, .2715886486360520},
            {6, .3564459815421428E-3, .5848617133811376, .3101924707571355},
            {6, .3578464061225468E-3, .6201348281584887, .3476121052890973},
            {6, .3239748762836212E-3, .3852191185387871, .0376322488003511},
            {6, .3345491784174287E-3, .4325025061073423, .0765958193563713},
            {6, .3429126177301782E-3, .4778486229734490, .1163381306083900},
            {6, .3492420343097421E-3, .5211663693009000, .1563890598752899},
            {6, .3537399050235257E-3, .5623469504853703, .1963320810149200},
            {6, .3566209152659172E-3, .6012718188659246, .2357847407258738},
            {6, .3581084321919782E-3, .6378179206390117, .2743846121244060},
            {6, .3426522117591512E-3, .4836936460214534, .0389590261073902},
            {6, .3491848770121379E-3, .5293792562683797, .0787124681931264},
            {6, .3539318235231476E-3, .5726281253100033, .1187963808202981},
            {6, .3570231438458694E-3, .6133658776169068, .1587914708061787},
            {6, .3586207335051714E-3, .6515085491865307, .1983058575227646},
            {6, .3541196205164025E-3, .5778692716064976, .0397720968979154},
            {6, .3574296911573953E-3, .6207904288086192, .0799015759298115},
            {6, .3591993279818963E-3, .6608688171046802, .1199671308754309},
            {6, .3595855034661997E-3, .6656263089489129, .0401595595780597},
        }},
        {3470, {
            {1, .2040382730826330E-4, 0, 0},
            {3, .3178149703889544E-3, 0, 0},
            {4, .8288115128076111E-4, .0172142083290623, 0},
            {4, .1360883192522954E-3, .0440887537498177, 0},
            {4, .1766854454542662E-3, .0759468081387868, 0},
            {4, .2083153161230153E-3, .1108335359204799, 0},
            {4, .2333279544657158E-3, .1476517054388567, 0},
            {4, .2532809539930247E-3, .1856731870860615, 0},
            {4, .2692472184211158E-3, .2243634099428821, 0},
            {4, .2819949946811885E-3, .2633006881662727, 0},
            {4, .2920953593973030E-3, .3021340904916283, 0},
            {4, .2999889782948352E-3, .3405594048030089, 0},
            {4, .3060292120496902E-3, .3783044434007372, 0},
            {4, .3105109167522192E-3, .4151194767407910, 0},
            {4, .3136902387550312E-3, .4507705766443257, 0},
            {4, .3157984652454632E-3, .4850346056573187, 0},
            {4, .3170516518425422E-3, .5176950817792469, 0},
            {4, .3176568425633755E-3, .5485384240820989, 0},
            {4, .3177198411207062E-3, .6039117238943308, 0},
            {4, .3175519492394733E-3, .6279956655573113, 0},
            {4, .3174654952634756E-3, .6493636169568952, 0},
            {4, .3175676415467654E-3, .6677644117704504, 0},
            {4, .3178923417835410E-3, .6829368572115624, 0},
            {4, .3183788287531909E-3, .6946195818184121, 0},
            {4, .3188755151918807E-3, .7025711542057026, 0},
            {4, .3191916889313849E-3, .7066004767140119, 0},
            {5, .1231779611744508E-3, .0513253768994606, 0},
            {5, .1924661373839880E-3, .1297994661331225, 0},
            {5, .2380881867403424E-3, .2188852049401307, 0},
            {5, .2693100663037885E-3, .3123174824903457, 0},
            {5, .2908673382834366E-3, .4064037620738195, 0},
            {5, .3053914619381535E-3, .4984958396944782, 0},
            {5, .3143916684147777E-3, .5864975046021365, 0},
            {5, .3187042244055363E-3, .6686711634580175, 0},
            {6, .1635219535869790E-3, .0871573878083595, .0255717523336758},
            {6, .1968109917696070E-3, .1248383123134007, .0560482338337668},
            {6, .2236754342249974E-3, .1638062693383378, .0896856860190076},
            {6, .2453186687017181E-3, .2035586203373176, .1254086651976279},
            {6, .2627551791580541E-3, .2436798975293774, .1624780150162012},
            {6, .2767654860152220E-3, .2838207507773806, .2003422342683208},
            {6, .2879467027765895E-3, .3236787502217692, .2385628026255263},
            {6, .2967639918918702E-3, .3629849554840691, .2767731148783578},
            {6, .3035900684660351E-3, .4014948081992087, .3146542308245309},
            {6, .3087338237298308E-3, .4389818379260225, .3519196415895088},
            {6, .3124608838860167E-3, .4752331143674377, .3883050984023654},
            {6, .3150084294226743E-3, .5100457318374018, .4235613423908649},
            {6, .3165958398598402E-3, .5432238388954868, .4574484717196220},
            {6, .3174320440957372E-3, .5745758685072442, .4897311639255524},
            {6, .2182188909812599E-3, .1723981437592809, .0301063059788110},
            {6, .2399727933921445E-3, .2149553257844597, .0632603155420469},
            {6, .2579796133514652E-3, .2573256081247422, .0984856698025863},
            {6, .2727114052623535E-3, .2993163751238106, .1350835952384266},
            {6, .2846327656281355E-3, .3407238005148000, .1725184055442181},
            {6, .2941491102051334E-3, .3813454978483264, .2103559279730725},
            {6, .3016049492136107E-3, .4209848104423343, .2482278774554860},
            {6, .3072949726175648E-3, .4594519699996300, .2858099509982883},
            {6, .3114768142886460E-3, .4965640166185930, .3228075659915428},
            {6, .3143823673666223E-3, .5321441655571562, .3589459907204151},
            {6, .3162269764661535E-3, .5660208438582166, .3939630088864310},
            {6, .3172164663759821E-3, .5980264315964364, .4276029922949089},
            {6, .2554575398967435E-3, .2644215852350733, .0330093942907255},
            {6, .2701704069135677E-3, .3090113743443063, .0680388765007850},
            {6, .2823693413468940E-3, .3525871079197808, .1044326136206709},
            {6, .2922898463214289E-3, .3950418005354029, .1416751597517679},
            {6, .3001829062162428E-3, .4362475663430163, .1793408610504821},
            {6, .3062890864542953E-3, .4760661812145854, .2170630750175722},
            {6, .3108328279264746E-3, .5143551042512103, .2545145157815807},
            {6, .3140243146201245E-3, .5509709026935597, .2913940101706601},
            {6, .3160638030977130E-3, .5857711030329428, .3274169910910705},
            {6, .3171462882206275E-3, .6186149917404392, .3623081329317265},
            {6, .2812388416031796E-3, .3586894569557064, .0349735438645004},
            {6, .2912137500288045E-3, .4035266610019441, .0712973673975709},
            {6, .2993241256502206E-3, .4467775312332510, .1084758620193165},
            {6, .3057101738983822E-3, .4883638346608543, .1460915689241772},
            {6, .3105319326251432E-3, .5281908348434601, .1837790832369980},
            {6, .3139565514428167E-3, .5661542687149311, .2212075390874021},
            {6, .3161543006806366E-3, .6021450102031451, .2580682841160985},
            {6, .3172985960613294E-3, .6360520783610050, .2940656362094121},
            {6, .2989400336901431E-3, .4521611065087196, .0363105536586700},
            {6, .3054555883947677E-3, .4959365651560963, .0734831846848435},
            {6, .3104764960807702E-3, .5376815804038283, .1111087643812648},
            {6, .3141015825977616E-3, .5773314480243767, .1488226085145408},
            {6, .3164520621159896E-3, .6148113245575056, .1862892274135151},
            {6, .3176652305912204E-3, .6500407462842380, .2231909701714456},
            {6, .3105097161023939E-3, .5425151448707213, .0371820130611894},
            {6, .3143014117890550E-3, .5841860556907931, .0748361633506735},
            {6, .3168172866287200E-3, .6234632186851500, .1125990834266120},
            {6, .3181401865570968E-3, .6602934551848842, .1501303813157619},
            {6, .3170663659156037E-3, .6278573968375105, .0376755993024572},
            {6, .3185447944625510E-3, .6665611711264577, .0754844330136016},
        }},
        {3890, {
            {1, .1807395252196920E-4, 0, 0},
            {2, .2848008782238827E-3, 0, 0},
            {3, .2836065837530581E-3, 0, 0},
            {4, .7013149266673816E-4, .0158787641985835, 0},
            {4, .1162798021956766E-3, .0406919359375121, 0},
            {4, .1518728583972105E-3, .0702588811525800, 0},
            {4, .1798796108216934E-3, .1027495450028704, 0},
            {4, .2022593385972785E-3, .1371457730893426, 0},
            {4, .2203093105575464E-3, .1727758532671953, 0},
            {4, .2349294234299855E-3, .2091492038929037, 0},
            {4, .2467682058747003E-3, .2458813281751915, 0},
            {4, .2563092683572224E-3, .2826545859450066, 0},
            {4, .2639253896763318E-3, .3191957291799622, 0},
            {4, .2699137479265108E-3, .3552621469299578, 0},
            {4, .2745196420166739E-3, .3906329503406230, 0},
            {4, .2779529197397593E-3, .4251028614093031, 0},
            {4, .2803996086684265E-3, .4584777520111870, 0},
            {4, .2820302356715842E-3, .4905711358710193, 0},
            {4, .2830056747491068E-3, .5212011669847385, 0},
            {4, .2834808950776839E-3, .5501878488737995, 0},
            {4, .2835282339078929E-3, .6025037877479342, 0},
            {4, .2833819267065800E-3, .6254572689549016, 0},
            {4, .2832858336906784E-3, .6460107179528248, 0},
            {4, .2833268235451244E-3, .6639541138154251, 0},
            {4, .2835432677029253E-3, .6790688515667495, 0},
            {4, .2839091722743049E-3, .6911338580371512, 0},
            {4, .2843308178875841E-3, .6999385956126490, 0},
            {4, .2846703550533846E-3, .7053037748656896, 0},
            {5, .1051193406971900E-3, .0473222438718012, 0},
            {5, .1657871838796974E-3, .1202100529326803, 0},
            {5, .2064648113714232E-3, .2034304820664855, 0},
            {5, .2347942745819741E-3, .2912285643573002, 0},
            {5, .2547775326597726E-3, .3802361792726768, 0},
            {5, .2686876684847025E-3, .4680598511056146, 0},
            {5, .2778665755515867E-3, .5528151052155599, 0},
            {5, .2830996616782929E-3, .6329386307803041, 0},
            {6, .1403063340168372E-3, .0805651665136907, .0236345468400312},
            {6, .1696504125939477E-3, .1156476077139389, .0519129163254594},
            {6, .1935787242745390E-3, .1520473382760421, .0832271573699452},
            {6, .2130614510521968E-3, .1892986699745931, .1165855667993712},
            {6, .2289381265931048E-3, .2270194446777792, .1513077167409504},
            {6, .2418630292816186E-3, .2648908185093273, .1868882025807859},
            {6, .2523400495631193E-3, .3026389259574136, .2229277629776224},
            {6, .2607623973449605E-3, .3400220296151384, .2590951840746235},
            {6, .2674441032689209E-3, .3768217953335510, .2951047291750847},
            {6, .2726432360343356E-3, .4128372900921884, .3307019714169930},
            {6, .2765787685924545E-3, .4478807131815630, .3656544101087634},
            {6, .2794428690642224E-3, .4817742034089257, .3997448951939695},
            {6, .2814099002062895E-3, .5143472814653344, .4327667110812024},
            {6, .2826429531578994E-3, .5454346213905650, .4645196123532293},
            {6, .2832983542550884E-3, .5748739313170252, .4948063555703345},
            {6, .1886695565284976E-3, .1599598738286342, .0279235759004898},
            {6, .2081867882748234E-3, .1998097412500951, .0587714103813907},
            {6, .2245148680600796E-3, .2396228952566202, .0916457391469138},
            {6, .2380370491511872E-3, .2792228341097746, .1259049641962687},
            {6, .2491398041852455E-3, .3184251107546741, .1610594823400863},
            {6, .2581632405881230E-3, .3570481164426244, .1967151653460898},
            {6, .2653965506227417E-3, .3949164710492144, .2325404606175168},
            {6, .2710857216747087E-3, .4318617293970503, .2682461141151439},
            {6, .2754434093903659E-3, .4677221009931678, .3035720116011973},
            {6, .2786579932519380E-3, .5023417939270955, .3382781859197439},
            {6, .2809011080679474E-3, .5355701836636128, .3721383065625942},
            {6, .2823336184560987E-3, .5672608451328771, .4049346360466055},
            {6, .2831101175806309E-3, .5972704202540162, .4364538098633802},
            {6, .2221679970354546E-3, .2461687022333596, .0307042316683337},
            {6, .2356185734270703E-3, .2881774566286831, .0633803466928188},
            {6, .2469228344805590E-3, .3293963604116978, .0974286248706794},
            {6, .2562726348642046E-3, .3697303822241377, .1323799532282290},
            {6, .2638756726753028E-3, .4090663023135127, .1678497018129336},
            {6, .2699311157390862E-3, .4472819355411712, .2035095105326114},
            {6, .2746233268403837E-3, .4842513377231437, .2390692566672091},
            {6, .2781225674454771E-3, .5198477629962928, .2742649818076149},
            {6, .2805881254045684E-3, .5539453011883145, .3088503806580094},
            {6, .2821719877004913E-3, .5864196762401251, .3425904245906614},
            {6, .2830222502333124E-3, .6171484466668390, .3752562294789468},
            {6, .2457995956744870E-3, .3350337830565727, .0326158993463475},
            {6, .2551474407503706E-3, .3775773224758284, .0665843892808157},
            {6, .2629065335195311E-3, .4188155229848973, .1014565797157954},
            {6, .2691900449925075E-3, .4586805892009344, .1368573320843822},
            {6, .2741275485754276E-3, .4970895714224235, .1724614851951608},
            {6, .2778530970122595E-3, .5339505133960747, .2079779381416412},
            {6, .2805010567646741E-3, .5691665792531440, .2431385788322288},
            {6, .2822055834031040E-3, .6026387682680377, .2776901883049853},
            {6, .2831016901243473E-3, .6342676150163307, .3113881356386632},
            {6, .2624474901131803E-3, .4237951119537067, .0339487784866435},
            {6, .2688034163039377E-3, .4656918683234929, .0688021955629145},
            {6, .2738932751287636E-3, .5058857069185980, .1041946859721635},
            {6, .2777944791242523E-3, .5443204666713995, .1398039738736393},
            {6, .2806011661660987E-3, .5809298813759742, .1753373381196155},
            {6, .2824181456597460E-3, .6156416039447128, .2105215793514010},
            {6, .2833585216577828E-3, .6483801351066604, .2450953312157051},
            {6, .2738165236962878E-3, .5103616577251688, .0348556064380072},
            {6, .2778365208203180E-3, .5506738792580681, .0702630863151203},
            {6, .2807852940418966E-3, .5889573040995292, .1059035061296403},
            {6, .2827245949674705E-3, .6251641589516930, .1414823925236026},
            {6, .2837342344829828E-3, .6592414921570178, .1767207908214530},
            {6, .2809233907610981E-3, .5930314017533383, .0354218933956167},
            {6, .2829930809742694E-3, .6309812253390175, .0710957404036955},
            {6, .2841097874111479E-3, .6666296011353230, .1067259792282730},
            {6, .2843455206008783E-3, .6703715271049921, .0356945526882081},
        }},
        {4334, {
            {1, .1449063022537883E-4, 0, 0},
            {3, .2546377329828424E-3, 0, 0},
            {4, .6018432961087496E-4, .0146289615183101, 0},
            {4, .1002286583263673E-3, .0376984081249314, 0},
            {4, .1315222931028093E-3, .0652470190409689, 0},
            {4, .1564213746876724E-3, .0956054341613465, 0},
            {4, .1765118841507736E-3, .1278335898929198, 0},
            {4, .1928737099311080E-3, .1613096104466031, 0},
            {4, .2062658534263270E-3, .1955806225745371, 0},
            {4, .2172395445953787E-3, .2302935218498028, 0},
            {4, .2262076188876047E-3, .2651584344113027, 0},
            {4, .2334885699462397E-3, .2999276825183209, 0},
            {4, .2393355273179203E-3, .3343828669718798, 0},
            {4, .2439559200468863E-3, .3683265013750518, 0},
            {4, .2475251866060002E-3, .4015763206518108, 0},
            {4, .2501965558158773E-3, .4339612026399770, 0},
            {4, .2521081407925925E-3, .4653180651114582, 0},
            {4, .2533881002388081E-3, .4954893331080803, 0},
            {4, .2541582900848261E-3, .5243207068924930, 0},
            {4, .2545365737525860E-3, .5516590479041704, 0},
            {4, .2545726993066799E-3, .6012371927804177, 0},
            {4, .2544456197465555E-3, .6231574466449818, 0},
            {4, .2543481596881064E-3, .6429416514181271, 0},
            {4, .2543506451429194E-3, .6604124272943594, 0},
            {4, .2544905675493763E-3, .6753851470408250, 0},
            {4, .2547611407344429E-3, .6876717970626161, 0},
            {4, .2551060375448869E-3, .6970895061319234, 0},
            {4, .2554291933816039E-3, .7034746912553310, 0},
            {4, .2556255710686343E-3, .7067017217542295, 0},
            {5, .9041339695118196E-4, .0438222350113112, 0},
            {5, .1438426330079022E-3, .1117474077400006, 0},
            {5, .1802523089820518E-3, .1897153252911440, 0},
            {5, .2060052290565496E-3, .2724023009910331, 0},
            {5, .2245002248967466E-3, .3567163308709902, 0},
            {5, .2377059847731150E-3, .4404784483028087, 0},
            {5, .2468118955882525E-3, .5219833154161411, 0},
            {5, .2525410872966528E-3, .5998179868977553, 0},
            {5, .2553101409933397E-3, .6727803154548222, 0},
            {6, .1212879733668632E-3, .0747656394316609, .0219316850946118},
            {6, .1472872881270931E-3, .1075341482001416, .0482641928153389},
            {6, .1686846601010828E-3, .1416344885203259, .0775119188357574},
            {6, .1862698414660208E-3, .1766325315388586, .1087558139247680},
            {6, .2007430956991861E-3, .2121744174481514, .1413661374253096},
            {6, .2126568125394796E-3, .2479669443408145, .1748768214258880},
            {6, .2224394603372113E-3, .2837600452294113, .2089216406612073},
            {6, .2304264522673135E-3, .3193344933193984, .2431987685545972},
            {6, .2368854288424087E-3, .3544935442438745, .2774497054377770},
            {6, .2420352089461772E-3, .3890571932288154, .3114460356156915},
            {6, .2460597113081295E-3, .4228581214259090, .3449806851913012},
            {6, .2491181912257687E-3, .4557387211304052, .3778618641248256},
            {6, .2513528194205857E-3, .4875487950541643, .4099086391698978},
            {6, .2528943096693220E-3, .5181436529962997, .4409474925853973},
            {6, .2538660368488136E-3, .5473824095600661, .4708094517711291},
            {6, .2543868648299022E-3, .5751263398976174, .4993275140354637},
            {6, .1642595537825183E-3, .1489515746840028, .0259938199326702},
            {6, .1818246659849308E-3, .1863656444351767, .0547928653246219},
            {6, .1966565649492420E-3, .2238602880356348, .0855676325142525},
            {6, .2090677905657991E-3, .2612723375728160, .1177257802267011},
            {6, .2193820409510504E-3, .2984332990206190, .1508168456192700},
            {6, .2278870827661928E-3, .3351786584663333, .1844801892177727},
            {6, .2348283192282090E-3, .3713505522209120, .2184145236087598},
            {6, .2404139755581477E-3, .4067981098954663, .2523590641486229},
            {6, .2448227407760734E-3, .4413769993687534, .2860812976901373},
            {6, .2482110455592573E-3, .4749487182516394, .3193686757808996},
            {6, .2507192397774103E-3, .5073798105075426, .3520226949547602},
            {6, .2524765968534880E-3, .5385410448878654, .3838544395667890},
            {6, .2536052388539425E-3, .5683065353670530, .4146810037640963},
            {6, .2542230588033068E-3, .5965527620663510, .4443224094681121},
            {6, .1944817013047896E-3, .2299227700856157, .0286575766405758},
            {6, .2067862362746635E-3, .2695752998553267, .0592342168448599},
            {6, .2172440734649114E-3, .3086178716611389, .0911781777605772},
            {6, .2260125991723423E-3, .3469649871659077, .1240593814082605},
            {6, .2332655008689523E-3, .3845153566319655, .1575272058259175},
            {6, .2391699681532458E-3, .4211600033403215, .1912845163525413},
            {6, .2438801528273928E-3, .4567867834329882, .2250710177858171},
            {6, .2475370504260665E-3, .4912829319232061, .2586521303440910},
            {6, .2502707235640574E-3, .5245364793303812, .2918112242865407},
            {6, .2522031701054241E-3, .5564369788915756, .3243439239067890},
            {6, .2534511269978784E-3, .5868757697775288, .3560536787835351},
            {6, .2541284914955151E-3, .6157458853519617, .3867480821242581},
            {6, .2161509250688394E-3, .3138461110672113, .0305137463750728},
            {6, .2248778513437852E-3, .3542495872050569, .0623711123373075},
            {6, .2322388803404617E-3, .3935751553120181, .0951622395240191},
            {6, .2383265471001355E-3, .4317634668111147, .1285467341508517},
            {6, .2432476675019525E-3, .4687413842250821, .1622318931656033},
            {6, .2471122223750674E-3, .5044274237060283, .1959581153836453},
            {6, .2500291752486870E-3, .5387354077925727, .2294888081183837},
            {6, .2521055942764682E-3, .5715768898356105, .2626031152713945},
            {6, .2534472785575503E-3, .6028627200136111, .2950904075286713},
            {6, .2541599713080121E-3, .6325039812653463, .3267458451113286},
            {6, .2317380975862936E-3, .3981986708423407, .0318329145874982},
            {6, .2378550733719775E-3, .4382791182133300, .0645954819388091},
            {6, .2428884456739118E-3, .4769233057218166, .0979575703708795},
            {6, .2469002655757292E-3, .5140823911194238, .1316307235126655},
            {6, .2499657574265851E-3, .5496977833862983, .1653556486358704},
            {6, .2521676168486082E-3, .5837047306512727, .1988931724126510},
            {6, .2535935662645334E-3, .6160349566926879, .2320174581438950},
            {6, .2543356743363214E-3, .6466185353209440, .2645106562168662},
            {6, .2427353285201535E-3, .4810835158795404, .0327591780774399},
            {6, .2468258039744386E-3, .5199925041324341, .0661254618396718},
            {6, .2500060956440310E-3, .5571717692207494, .0998149833147414},
            {6, .2523238365420979E-3, .5925789250836379, .1335687001410374},
            {6, .2538399260252846E-3, .6261658523859670, .1671444402896463},
            {6, .2546255927268069E-3, .6578811126669331, .2003106382156076},
            {6, .2500583360048449E-3, .5609624612998100, .0333750094023134},
            {6, .2524777638260203E-3, .5979959659984670, .0670875033590180},
            {6, .2540951193860656E-3, .6330523711054002, .1008792126424850},
            {6, .2549524085027472E-3, .6660960998103972, .1345050343171794},
            {6, .2542569507009158E-3, .6365384364585819, .0337279946073705},
            {6, .2552114127580376E-3, .6710994302899275, .0675524930967803},
        }},
        {4802, {
            {1, .9687521879420705E-4, 0, 0},
            {2, .2307897895367918E-3, 0, 0},
            {3, .2297310852498558E-3, 0, 0},
            {4, .7386265944001918E-4, .0233572860888706, 0},
            {4, .8257977698542210E-4, .0435298783655065, 0},
            {4, .9706044762057630E-4, .0643920052108880, 0},
            {4, .1302393847117003E-3, .0900394363199318, 0},
            {4, .1541957004600968E-3, .1196706615548473, 0},
            {4, .1704459770092199E-3, .1511715412838134, 0},
            {4, .1827374890942906E-3, .1835982828503801, 0},
            {4, .1926360817436107E-3, .2165081259155405, 0},
            {4, .2008010239494833E-3, .2496208720417563, 0},
            {4, .2075635983209175E-3, .2827200673567900, 0},
            {4, .2131306638690909E-3, .3156190823994346, 0},
            {4, .2176562329937335E-3, .3481476793749115, 0},
            {4, .2212682262991018E-3, .3801466086947226, 0},
            {4, .2240799515668565E-3, .4114652119634011, 0},
            {4, .2261959816187525E-3, .4419598786519751, 0},
            {4, .2277156368808855E-3, .4714925949329543, 0},
            {4, .2287351772128336E-3, .4999293972879466, 0},
            {4, .2293490814084085E-3, .5271387221431248, 0},
            {4, .2296505312376273E-3, .5529896780837761, 0},
            {4, .2296793832318756E-3, .6000856099481712, 0},
            {4, .2295785443842974E-3, .6210562192785175, 0},
            {4, .2295017931529102E-3, .6401165879934240, 0},
            {4, .2295059638184868E-3, .6571144029244333, 0},
            {4, .2296232343237362E-3, .6718910821718863, 0},
            {4, .2298530178740771E-3, .6842845591099010, 0},
            {4, .2301579790280501E-3, .6941353476269816, 0},
            {4, .2304690404996513E-3, .7012965242212991, 0},
            {4, .2307027995907102E-3, .7056471428242644, 0},
            {5, .9312274696671092E-4, .0459555764358590, 0},
            {5, .1199919385876926E-3, .1049316742435023, 0},
            {5, .1598039138877690E-3, .1773548879549274, 0},
            {5, .1822253763574900E-3, .2559071411236127, 0},
            {5, .1988579593655040E-3, .3358156837985898, 0},
            {5, .2112620102533307E-3, .4155835743763893, 0},
            {5, .2201594887699007E-3, .4937894296167472, 0},
            {5, .2261622590895036E-3, .5691569694793316, 0},
            {5, .2296458453435705E-3, .6405840854894251, 0},
            {6, .1006006990267000E-3, .0734513389414335, .0217784408148607},
            {6, .1227676689635876E-3, .1009859834044931, .0459036218577519},
            {6, .1467864280270117E-3, .1324289619748758, .0725506309569088},
            {6, .1644178912101232E-3, .1654272109607127, .1017825451960684},
            {6, .1777664890718961E-3, .1990767186776461, .1325652320980364},
            {6, .1884825664516690E-3, .2330125945523278, .1642765374496765},
            {6, .1973269246453848E-3, .2670080611108287, .1965360374337889},
            {6, .2046767775855328E-3, .3008753376294316, .2290726770542238},
            {6, .2107600125918040E-3, .3344475596167860, .2616645495370823},
            {6, .2157416362266829E-3, .3675709724070786, .2941150728843141},
            {6, .2197557816920721E-3, .4001000887587812, .3262440400919066},
            {6, .2229192611835437E-3, .4318956350436028, .3578835350611916},
            {6, .2253385110212775E-3, .4628239056795531, .3888751854043678},
            {6, .2271137107548774E-3, .4927563229773636, .4190678003222840},
            {6, .2283414092917525E-3, .5215687136707969, .4483151836883852},
            {6, .2291161673130077E-3, .5491402346984905, .4764740676087880},
            {6, .2295313908576598E-3, .5753520160126075, .5034021310998277},
            {6, .1438204721359031E-3, .1388326356417754, .0243543651037281},
            {6, .1607738025495257E-3, .1743686900537244, .0511889705734265},
            {6, .1741483853528379E-3, .2099737037950268, .0801469504853963},
            {6, .1851918467519151E-3, .2454492590908548, .1105117874155699},
            {6, .1944628638070613E-3, .2807219257864278, .1417950531570966},
            {6, .2022495446275152E-3, .3156842271975842, .1736604945719597},
            {6, .2087462382438514E-3, .3502090945177752, .2058466324693981},
            {6, .2141074754818308E-3, .3841684849519686, .2381284261195919},
            {6, .2184640913748162E-3, .4174372367906016, .2703031270422569},
            {6, .2219309165220329E-3, .4498926465011892, .3021845683091309},
            {6, .2246123118340624E-3, .4814146229807701, .3335993355165720},
            {6, .2266062766915125E-3, .5118863625734701, .3643833735518232},
            {6, .2280072952230796E-3, .5411947455119144, .3943789541958179},
            {6, .2289082025202583E-3, .5692301500357246, .4234320144403542},
            {6, .2294012695120025E-3, .5958857204139576, .4513897947419260},
            {6, .1722434488736947E-3, .2156270284785766, .0268122575544449},
            {6, .1830237421455091E-3, .2532385054909710, .0555749574780561},
            {6, .1923855349997633E-3, .2902564617771537, .0856936806295025},
            {6, .2004067861936271E-3, .3266979823143256, .1167367450324135},
            {6, .2071817297354263E-3, .3625039627493614, .1483861994003304},
            {6, .2128250834102103E-3, .3975838937548699, .1803821503011405},
            {6, .2174513719440102E-3, .4318396099009774, .2124962965666424},
            {6, .2211661839150214E-3, .4651706555732742, .2445221837805913},
            {6, .2240665257813102E-3, .4974752649620969, .2762701224322987},
            {6, .2262439516632620E-3, .5286517579627517, .3075627775211328},
            {6, .2277874557231869E-3, .5586001195731894, .3382311089826877},
            {6, .2287854314454994E-3, .5872229902021319, .3681108834741399},
            {6, .2293268499615575E-3, .6144258616235123, .3970397446872839},
            {6, .1912628201529828E-3, .2951676508064861, .0286749953875044},
            {6, .1992499672238701E-3, .3335085485472725, .0586787934190351},
            {6, .2061275533454027E-3, .3709561760636381, .0896109920502228},
            {6, .2119318215968572E-3, .4074722861667498, .1211627927626297},
            {6, .2167416581882652E-3, .4429923648839117, .1530748903554898},
            {6, .2206430730516600E-3, .4774428052721736, .1851176436721877},
            {6, .2237186938699523E-3, .5107446539535904, .2170829107658179},
            {6, .2260480075032884E-3, .5428151370542935, .2487786689026271},
            {6, .2277098884558542E-3, .5735699292556964, .2800239952795016},
            {6, .2287845715109671E-3, .6029253794562865, .3106445702878119},
            {6, .2293547268236294E-3, .6307998987073145, .3404689500841194},
            {6, .2056073839852528E-3, .3752652273692719, .0299714509818448},
            {6, .2114235865831876E-3, .4135383879344028, .0608672589867801},
            {6, .2163175629770551E-3, .4506113885153907, .0923884954843564},
            {6, .2203392158111650E-3, .4864401554606072, .1242786603851851},
            {6, .2235473176847839E-3, .5209708076611709, .1563086731483386},
            {6, .2260024141501235E-3, .5541422135830122, .1882696509388506},
            {6, .2277675929329182E-3, .5858880915113817, .2199672979126059},
            {6, .2289102112284834E-3, .6161399390603444, .2512165482924867},
            {6, .2295027954625118E-3, .6448296482255090, .2818368701871888},
            {6, .2161281589879992E-3, .4544796274917948, .0308897040506031},
            {6, .2201980477395102E-3, .4919389072146628, .0624094767763684},
            {6, .2234952066593166E-3, .5279313026985183, .0943070614428031},
            {6, .2260540098520838E-3, .5624169925571135, .1263547818770374},
            {6, .2279157981899988E-3, .5953484627093287, .1583430788822594},
            {6, .2291296918565571E-3, .6266730715339185, .1900748462555988},
            {6, .2297533752536649E-3, .6563363204278871, .2213599519592567},
            {6, .2234927356465995E-3, .5314574716585696, .0315250881151537},
            {6, .2261288012985219E-3, .5674614932298185, .0634386529146556},
            {6, .2280818160923688E-3, .6017706004970264, .0955150350422395},
            {6, .2293773295180159E-3, .6343471270264178, .1275440099801196},
            {6, .2300528767338634E-3, .6651494599127802, .1593252037671960},
            {6, .2281893855065666E-3, .6050184986005704, .0319253833849611},
            {6, .2295720444840727E-3, .6390163550880400, .0640282435396231},
            {6, .2303227649026753E-3, .6711199107088448, .0960980507700291},
            {6, .2304831913227114E-3, .6741354429572275, .0321185319627323},
        }},
        {5294, {
            {1, .9080510764308163E-4, 0, 0},
            {3, .2084824361987793E-3, 0, 0},
            {4, .5011105657239616E-4, .0230326168626145, 0},
            {4, .5942520409683854E-4, .0375720862016239, 0},
            {4, .9564394826109721E-4, .0582191203382185, 0},
            {4, .1185530657126338E-3, .0840312752919487, 0},
            {4, .1364510114230331E-3, .1122927798060578, 0},
            {4, .1505828825605415E-3, .1420125319192987, 0},
            {4, .1619298749867023E-3, .1726396437341978, 0},
            {4, .1712450504267789E-3, .2038170058115696, 0},
            {4, .1789891098164999E-3, .2352849892876508, 0},
            {4, .1854474955629795E-3, .2668363354312461, 0},
            {4, .1908148636673661E-3, .2982941279900452, 0},
            {4, .1952377405281833E-3, .3295002922087076, 0},
            {4, .1988349254282232E-3, .3603094918363593, 0},
            {4, .2017079807160050E-3, .3905857895173920, 0},
            {4, .2039473082709094E-3, .4202005758160837, 0},
            {4, .2056360279288953E-3, .4490310061597227, 0},
            {4, .2068525823066865E-3, .4769586160311491, 0},
            {4, .2076724877534488E-3, .5038679887049750, 0},
            {4, .2081694278237885E-3, .5296454286519962, 0},
            {4, .2084157631219326E-3, .5541776207164850, 0},
            {4, .2084381531128593E-3, .5990467321921213, 0},
            {4, .2083476277129307E-3, .6191467096294587, 0},
            {4, .2082686194459732E-3, .6375251212901849, 0},
            {4, .2082475686112415E-3, .6540514381131168, 0},
            {4, .2083139860289915E-3, .6685899064391509, 0},
            {4, .2084745561831237E-3, .6810013009681648, 0},
            {4, .2087091313375890E-3, .6911469578730340, 0},
            {4, .2089718413297697E-3, .6988956915141736, 0},
            {4, .2092003303479793E-3, .7041335794868721, 0},
            {4, .2093336148263241E-3, .7067754398018568, 0},
            {5, .7591708117365266E-4, .0384036870785362, 0},
            {5, .1083383968169186E-3, .0983548595411740, 0},
            {5, .1403019395292510E-3, .1665774947612998, 0},
            {5, .1615970179286436E-3, .2405702335362910, 0},
            {5, .1771144187504911E-3, .3165270770189046, 0},
            {5, .1887760022988168E-3, .3927386145645443, 0},
            {5, .1973474670768214E-3, .4678825918374656, 0},
            {5, .2033787661234659E-3, .5408022024266935, 0},
            {5, .2072343626517331E-3, .6104967445752438, 0},
            {5, .2091177834226918E-3, .6760910702685738, 0},
            {6, .9316684484675566E-4, .0665564412021739, .0193650887458842},
            {6, .1116193688682976E-3, .0944624616127018, .0425244200211587},
            {6, .1298623551559414E-3, .1242651925452509, .0680652931535437},
            {6, .1450236832456426E-3, .1553438064846751, .0956095749120537},
            {6, .1572719958149914E-3, .1871137110542670, .1245931657452888},
            {6, .1673234785867195E-3, .2192612628836257, .1545385828778978},
            {6, .1756860118725188E-3, .2515682807206955, .1851004249723368},
            {6, .1826776290439367E-3, .2838535866287290, .2160182608272384},
            {6, .1885116347992865E-3, .3159578817528521, .2470799012277111},
            {6, .1933457860170574E-3, .3477370882791392, .2781014208986402},
            {6, .1973060671902064E-3, .3790576960890540, .3089172523515731},
            {6, .2004987099616311E-3, .4097938317810200, .3393750055472244},
            {6, .2030170909281499E-3, .4398256572859637, .3693322470987730},
            {6, .2049461460119080E-3, .4690384114718480, .3986541005609877},
            {6, .2063653565200186E-3, .4973216048301053, .4272112491408562},
            {6, .2073507927381027E-3, .5245681526132446, .4548781735309936},
            {6, .2079764593256122E-3, .5506733911803888, .4815315355023251},
            {6, .2083150534968778E-3, .5755339829522474, .5070486445801855},
            {6, .1262715121590664E-3, .1305472386056362, .0228497037572237},
            {6, .1414386128545972E-3, .1637327908216477, .0481225433828838},
            {6, .1538740401313898E-3, .1972734634149637, .0753173445751193},
            {6, .1642434942331432E-3, .2308694653110130, .1039043639882017},
            {6, .1729790609237496E-3, .2643899218338160, .1334526587117626},
            {6, .1803505190260828E-3, .2977171599622171, .1636414868936382},
            {6, .1865475350079657E-3, .3307293903032310, .1942195406166568},
            {6, .1917182669679069E-3, .3633069198219073, .2249752879943753},
            {6, .1959851709034382E-3, .3953346955922727, .2557218821820032},
            {6, .1994529548117882E-3, .4267018394184914, .2862897925213193},
            {6, .2022138911146548E-3, .4573009622571704, .3165224536636518},
            {6, .2043518024208592E-3, .4870279559856109, .3462730221636496},
            {6, .2059450313018110E-3, .5157819581450322, .3754016870282835},
            {6, .2070685715318472E-3, .5434651666465393, .4037733784993613},
            {6, .2077955310694373E-3, .5699823887764627, .4312557784139123},
            {6, .2081980387824712E-3, .5952403350947741, .4577175367122110},
            {6, .1521318610377956E-3, .2025152599210369, .0252025361771956},
            {6, .1622772720185755E-3, .2381066653274425, .0522325450611900},
            {6, .1710498139420709E-3, .2732823383651612, .0806066968858862},
            {6, .1785911149448736E-3, .3080137692611118, .1099335754081255},
            {6, .1850125313687736E-3, .3422405614587601, .1399120955959857},
            {6, .1904229703933298E-3, .3758808773890420, .1702977801651705},
            {6, .1949259956121987E-3, .4088458383438932, .2008799256601680},
            {6, .1986161545363960E-3, .4410450550841152, .2314703052180836},
            {6, .2015790585641370E-3, .4723879420561312, .2618972111375892},
            {6, .2038934198707418E-3, .5027843561874343, .2920013195600270},
            {6, .2056334060538251E-3, .5321453674452458, .3216322555190551},
            {6, .2068705959462289E-3, .5603839113834030, .3506456615934198},
            {6, .2076753906106002E-3, .5874150706875146, .3789007181306267},
            {6, .2081179391734803E-3, .6131559381660038, .4062580170572782},
            {6, .1700345216228943E-3, .2778497016394506, .0269627127687623},
            {6, .1774906779990410E-3, .3143733562261912, .0552346931696047},
            {6, .1839659377002642E-3, .3501485810261827, .0844519320162646},
            {6, .1894987462975169E-3, .3851430322303653, .1143263119336083},
            {6, .1941548809452595E-3, .4193013979470415, .1446177898344475},
            {6, .1980078427252384E-3, .4525585960458567, .1751165438438091},
            {6, .2011296284744488E-3, .4848447779622947, .2056338306745660},
            {6, .2035888456966776E-3, .5160871208276894, .2359965487229226},
            {6, .2054516325352142E-3, .5462112185696926, .2660430223139146},
            {6, .2067831033092635E-3, .5751425068101756, .2956193664498032},
            {6, .2076485320284876E-3, .6028073872853597, .3245763905312779},
            {6, .2081141439525255E-3, .6291338275278409, .3527670026206972},
            {6, .1834383015469222E-3, .3541797528439391, .0282385347943555},
            {6, .1889540591777677E-3, .3908234972074657, .0574129637471311},
            {6, .1936677023597375E-3, .4264408450107590, .0872464663365020},
            {6, .1976176495066504E-3, .4609949666553286, .1175034422915616},
            {6, .2008536004560983E-3, .4944389496536006, .1479755652628428},
            {6, .2034280351712291E-3, .5267194884346086, .1784740659484352},
            {6, .2053944466027758E-3, .5577787810220990, .2088245700431244},
            {6, .2068077642882360E-3, .5875563763536670, .2388628136570763},
            {6, .2077250949661599E-3, .6159910016391269, .2684308928769185},
            {6, .2082062440705320E-3, .6430219602956267, .2973740761960252},
            {6, .1934374486546626E-3, .4300647036213646, .0291639992049398},
            {6, .1974107010484300E-3, .4661486308935531, .0589880302475566},
            {6, .2007129290388658E-3, .5009658555287261, .0892416269852541},
            {6, .2033736947471293E-3, .5344824270447704, .1197185199637321},
            {6, .2054287125902493E-3, .5666575997416371, .1502300756161382},
            {6, .2069184936818894E-3, .5974457471404752, .1806004191913564},
            {6, .2078883689808782E-3, .6267984444116886, .2106621764786252},
            {6, .2083886366116359E-3, .6546664713575417, .2402526932671914},
            {6, .2006593275470817E-3, .5042711004437253, .0298252920360766},
            {6, .2033728426135397E-3, .5392127456774380, .0600872806233992},
            {6, .2055008781377608E-3, .5726819437668618, .0905822767457140},
            {6, .2070651783518502E-3, .6046469254207278, .1211219235803400},
            {6, .2080953335094320E-3, .6350716157434952, .1515286404791580},
            {6, .2086284998988521E-3, .6639177679185454, .1816314681255552},
            {6, .2055549387644668E-3, .5757276040972253, .0302699175257544},
            {6, .2071871850267654E-3, .6090265823139756, .0607840229787077},
            {6, .2082856600431965E-3, .6406735344387661, .0913545998417664},
            {6, .2088705858819358E-3, .6706397927793709, .1218024155966590},
            {6, .2083995867536322E-3, .6435019674426665, .0305260835766064},
            {6, .2090509712889637E-3, .6747218676375681, .0611218577398309},
        }},
        {5810, {
            {1, .9735347946175486E-5, 0, 0},
            {2, .1907581241803167E-3, 0, 0},
            {3, .1901059546737578E-3, 0, 0},
            {4, .3926424538919212E-4, .0118236166240028, 0},
            {4, .6667905467294381E-4, .0306214500913896, 0},
            {4, .8868891315019136E-4, .0532979403683424, 0},
            {4, .1066306000958872E-3, .0784816553286222, 0},
            {4, .1214506743336128E-3, .1054038157636201, 0},
            {4, .1338054681640871E-3, .1335577797766211, 0},
            {4, .1441677023628504E-3, .1625769955502252, 0},
            {4, .1528880200826557E-3, .1921787193412792, 0},
            {4, .1602330623773609E-3, .2221340534690548, 0},
            {4, .1664102653445244E-3, .2522504912791132, 0},
            {4, .1715845854011323E-3, .2823610860679697, 0},
            {4, .1758901000133069E-3, .3123173966267560, 0},
            {4, .1794382485256736E-3, .3419847036953789, 0},
            {4, .1823238106757407E-3, .3712386456999758, 0},
            {4, .1846293252959976E-3, .3999627649876828, 0},
            {4, .1864284079323098E-3, .4280466458648093, 0},
            {4, .1877882694626914E-3, .4553844360185711, 0},
            {4, .1887716321852025E-3, .4818736094437834, 0},
            {4, .1894381638175673E-3, .5074138709260629, 0},
            {4, .1898454899533629E-3, .5319061304570707, 0},
            {4, .1900497929577815E-3, .5552514978677286, 0},
            {4, .1900671501924092E-3, .5981009025246183, 0},
            {4, .1899837555533510E-3, .6173990192228116, 0},
            {4, .1899014113156229E-3, .6351365239411131, 0},
            {4, .1898581257705106E-3, .6512010228227200, 0},
            {4, .1898804756095753E-3, .6654758363948120, 0},
            {4, .1899793610426402E-3, .6778410414853370, 0},
            {4, .1901464554844117E-3, .6881760887484110, 0},
            {4, .1903533246259542E-3, .6963645267094598, 0},
            {4, .1905556158463228E-3, .7023010617153579, 0},
            {4, .1907037155663528E-3, .7059004636628753, 0},
            {5, .5992997844249967E-4, .0355247031247257, 0},
            {5, .9749059382456977E-4, .0915117662084128, 0},
            {5, .1241680804599158E-3, .1566197930068980, 0},
            {5, .1437626154299360E-3, .2265467599271907, 0},
            {5, .1584200054793902E-3, .2988242318581361, 0},
            {5, .1694436550982744E-3, .3717482419703886, 0},
            {5, .1776617014018108E-3, .4440094491758889, 0},
            {5, .1836132434440077E-3, .5145337096756643, 0},
            {5, .1876494727075983E-3, .5824053672860230, 0},
            {5, .1899906535336482E-3, .6468283961043370, 0},
            {6, .8143252820767350E-4, .0609596425910437, .0178782827534293},
            {6, .9998859890887728E-4, .0881196227095939, .0395388874079210},
            {6, .1156199403068359E-3, .1165936722428831, .0637812179772299},
            {6, .1287632092635513E-3, .1460232857031785, .0898589081374504},
            {6, .1398378643365139E-3, .1761197110181755, .1172606510576162},
            {6, .1491876468417391E-3, .2066471190463718, .1456102876970995},
            {6, .1570855679175456E-3, .2374076026328152, .1746153823011775},
            {6, .1637483948103775E-3, .2682305474337051, .2040383070295584},
            {6, .1693500566632843E-3, .2989653312142369, .2336788634003698},
            {6, .1740322769393633E-3, .3294762752772209, .2633632752654219},
            {6, .1779126637278296E-3, .3596390887276086, .2929369098051601},
            {6, .1810908108835412E-3, .3893383046398812, .3222592785275512},
            {6, .1836529132600190E-3, .4184653789358347, .3512004791195743},
            {6, .1856752841777379E-3, .4469172319076166, .3796385677684537},
            {6, .1872270566606832E-3, .4745950813276976, .4074575378263879},
            {6, .1883722645591307E-3, .5014034601410262, .4345456906027828},
            {6, .1891714324525297E-3, .5272493404551239, .4607942515205134},
            {6, .1896827480450146E-3, .5520413051846366, .4860961284181720},
            {6, .1899628417059528E-3, .5756887237503077, .5103447395342789},
            {6, .1123301829001669E-3, .1225039430588352, .0213645592265579},
            {6, .1253698826711277E-3, .1539113217321372, .0452092616613719},
            {6, .1366266117678531E-3, .1856213098637712, .0708646817786482},
            {6, .1462736856106918E-3, .2174998728035131, .0978523948877292},
            {6, .1545076466685412E-3, .2494128336938330, .1258106396267210},
            {6, .1615096280814007E-3, .2812321562143480, .1544529125047001},
            {6, .1674366639741759E-3, .3128372276456111, .1835433512202753},
            {6, .1724225002437900E-3, .3441145160177973, .2128813258619585},
            {6, .1765810822987288E-3, .3749567714853510, .2422913734880829},
            {6, .1800104126010751E-3, .4052621732015610, .2716163748391453},
            {6, .1827960437331284E-3, .4349335453522385, .3007127671240280},
            {6, .1850140300716308E-3, .4638776641524965, .3294470677216479},
            {6, .1867333507394938E-3, .4920046410462687, .3576932543699155},
            {6, .1880178688638289E-3, .5192273554861704, .3853307059757764},
            {6, .1889278925654758E-3, .5454609081136522, .4122425044452694},
            {6, .1895213832507346E-3, .5706220661424140, .4383139587781027},
            {6, .1898548277397420E-3, .5946286755181518, .4634312536300553},
            {6, .1349105935937341E-3, .1905370790924295, .0237131153778198},
            {6, .1444060068369326E-3, .2242518717748009, .0491787805925481},
            {6, .1526797390930008E-3, .2577190808025936, .0759549896049514},
            {6, .1598208771406474E-3, .2908724534927187, .1036991083191100},
            {6, .1659354368615331E-3, .3236354020056219, .1321348584450234},
            {6, .1711279910946440E-3, .3559267359304543, .1610316571314789},
            {6, .1754952725601440E-3, .3876637123676956, .1901912080395707},
            {6, .1791247850802529E-3, .4187636705218842, .2194384950137950},
            {6, .1820954300877716E-3, .4491449019883107, .2486155334763858},
            {6, .1844788524548449E-3, .4787270932425445, .2775768931812335},
            {6, .1863409481706220E-3, .5074315153055574, .3061863786591120},
            {6, .1877433008795068E-3, .5351810507738336, .3343144718152556},
            {6, .1887444543705232E-3, .5619001025975381, .3618362729028427},
            {6, .1894009829375006E-3, .5875144035268046, .3886297583620408},
            {6, .1897683345035198E-3, .6119507308734495, .4145742277792031},
            {6, .1517327037467653E-3, .2619733870119463, .0254004718638935},
            {6, .1587740557483543E-3, .2968149743237949, .0520810701854399},
            {6, .1649093382274097E-3, .3310451504860488, .0797182847088560},
            {6, .1701915216193265E-3, .3646215567376676, .1080465999177927},
            {6, .1746847753144065E-3, .3974916785279360, .1368413849366629},
            {6, .1784555512007570E-3, .4295967403772029, .1659073184763559},
            {6, .1815687562112174E-3, .4608742854473447, .1950703730454614},
            {6, .1840864370663302E-3, .4912598858949903, .2241721144376724},
            {6, .1860676785390006E-3, .5206882758945558, .2530655255406489},
            {6, .1875690583743703E-3, .5490940914019820, .2816118409731066},
            {6, .1886453236347225E-3, .5764123302025542, .3096780504593238},
            {6, .1893501123329645E-3, .6025786004213506, .3371348366394987},
            {6, .1897366184519868E-3, .6275291964794956, .3638547827694396},
            {6, .1643908815152736E-3, .3348189479861771, .0266484193553744},
            {6, .1696300350907768E-3, .3699515545855295, .0542400006684349},
            {6, .1741553103844483E-3, .4042003071474669, .0825199271543085},
            {6, .1780015282386092E-3, .4375320100182624, .1112695182483710},
            {6, .1812116787077125E-3, .4699054490335947, .1402964116467816},
            {6, .1838323158085421E-3, .5012739879431952, .1694275117584291},
            {6, .1859113119837737E-3, .5315874883754966, .1985038235312689},
            {6, .1874969220221698E-3, .5607937109622116, .2273765660020893},
            {6, .1886375612681076E-3, .5888393223495521, .2559041492849764},
            {6, .1893819575809276E-3, .6156705979160163, .2839497251976899},
            {6, .1897794748256767E-3, .6412338809078123, .3113791060500690},
            {6, .1738963926584846E-3, .4076051259257167, .0275779229085846},
            {6, .1777442359873466E-3, .4423788125791520, .0558413683498429},
            {6, .1810010815068719E-3, .4760480917328258, .0845777208772714},
            {6, .1836920318248129E-3, .5085838725946297, .1135975846359248},
            {6, .1858489473214328E-3, .5399513637391218, .1427286904765053},
            {6, .1875079342496592E-3, .5701118433636380, .1718112740057635},
            {6, .1887080239102310E-3, .5990240530606021, .2006944855985351},
            {6, .1894905752176822E-3, .6266452685139695, .2292335090598907},
            {6, .1898991061200695E-3, .6529320971415942, .2572871512353714},
            {6, .1809065016458791E-3, .4791583834610126, .0282609419773593},
            {6, .1836297121596799E-3, .5130373952796941, .0569987135968365},
            {6, .1858426916241869E-3, .5456252429628476, .0860271252855439},
            {6, .1875654101134641E-3, .5768956329682385, .1151748137221281},
            {6, .1888240751833503E-3, .6068186944699046, .1442811654136362},
            {6, .1896497383866979E-3, .6353622248024907, .1731930321657680},
            {6, .1900775530219121E-3, .6624927035731797, .2017619958756061},
            {6, .1858525041478814E-3, .5484933508028488, .0287421975590739},
            {6, .1876248690077947E-3, .5810207682142106, .0577831212371369},
            {6, .1889404439064607E-3, .6120955197181353, .0869526237143953},
            {6, .1898168539265290E-3, .6416944284294319, .1160893767057166},
            {6, .1902779940661772E-3, .6697926391731260, .1450378826743251},
            {6, .1890125641731815E-3, .6147594390585488, .0290495762234146},
            {6, .1899434637795751E-3, .6455390026356783, .0582380915261720},
            {6, .1904520856831751E-3, .6747258588365477, .0874038489988472},
            {6, .1905534498734563E-3, .6772135750395347, .0291994613580811},
        }},
    };
    return rules;
}

}  // namespace vmax::detail
