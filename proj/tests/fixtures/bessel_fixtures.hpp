#pragma once

// Generated by gen_bessel.py (mpmath, 40 digits). Do not edit.

struct BesselFixture {
  double x, j0, j1;
};

inline constexpr BesselFixture kBesselFixtures[] = {
    {0.0, 1.0, 0.0},
    {0.25, 0.9844359292958527049236911, 0.124025977322726922731575},
    {0.5, 0.9384698072408129042284047, 0.2422684576748738863839546},
    {0.75, 0.8642422751666486235557311, 0.349243602174862192523281},
    {1.0, 0.7651976865579665514497175, 0.4400505857449335159596822},
    {1.25, 0.6459060852712852649498506, 0.5106232603198804670694748},
    {1.5, 0.5118276717359181287490517, 0.5579365079100996419901212},
    {1.75, 0.3690325301851507638520349, 0.5801561976389924973142977},
    {2.0, 0.2238907791412356680518275, 0.5767248077568733872024482},
    {2.25, 0.08274985128873403655450822, 0.5483783566469601622021176},
    {2.5, -0.04838377646819799632728778, 0.4970941024642740380108163},
    {2.75, -0.1641414278085136591370302, 0.4259723029579023412395738},
    {3.0, -0.2600519549019334376241547, 0.3390589585259364589255146},
    {3.25, -0.3327508021706115093886141, 0.2411196880152038882361695},
    {3.5, -0.3801277399872633773787493, 0.1373775273623271857161319},
    {3.75, -0.4014060549361743350040995, 0.03322934912967972850371541},
    {4.0, -0.3971498098638473722865908, -0.06604332802354913614318542},
    {4.25, -0.3691997702998954025242994, -0.1555531929783427060472497},
    {4.5, -0.320542508985121424355489, -0.2310604319233706340080965},
    {4.75, -0.2551208274913739118139259, -0.2891867986471104107279213},
    {5.0, -0.177596771314338304347397, -0.3275791375914652220377343},
    {5.25, -0.09308098963931787284604166, -0.3450139785794376827741115},
    {5.5, -0.006843869417819196823958679, -0.341438215429043350179731},
    {5.75, 0.07597533201690107592092182, -0.3179445239193326914553453},
    {6.0, 0.1506452572509969316623279, -0.2766838581275656081727748},
    {6.25, 0.2130900530766607273175885, -0.2207208775392372699654853},
    {6.5, 0.2600946055816063813995955, -0.1538413014099718371097835},
    {6.75, 0.289456789784556552764615, -0.08032278525527721554601664},
    {7.0, 0.3000792705195555966502754, -0.004682823482345832699113806},
    {7.25, 0.2919969241917789975052566, 0.0685817006531317445305749},
    {7.5, 0.2663396578803783968660494, 0.1352484275797055051822405},
    {7.75, 0.2252340691201066972855459, 0.1916025921891178055679715},
    {8.0, 0.1716508071375539060908694, 0.2346363468539146243812767},
    {8.25, 0.109207471506101375538422, 0.2622035519927438187226039},
    {8.5, 0.04193925184293450355176072, 0.2731219636740537442650038},
    {8.75, -0.02594885609462996108108531, 0.2672178914862816127744038},
    {9.0, -0.09033361118287613433595078, 0.2453117865733252723226396},
    {9.25, -0.1474142628412362655721846, 0.2091466504701211150005983},
    {9.5, -0.1939287476874223554004746, 0.1612644307575298509506407},
    {9.75, -0.2273332995118482832722917, 0.104838501258497510183052},
    {10.0, -0.2459357644513483351977609, 0.04347274616886143666974877},
    {10.25, -0.2489757797828494583703072, -0.01902045569686856698806999},
    {10.5, -0.236648194462347126222906, -0.07885001422733148815291698},
    {10.75, -0.2100694898495107691727511, -0.1324701025429902031638829},
    {11.0, -0.1711903004071960883458273, -0.1767852989567215011377311},
    {11.25, -0.1226602417105699799354638, -0.2093251796247206151576319},
    {11.5, -0.06765394811166522843243136, -0.2283786206653234746143425},
    {11.75, -0.009669352567074631509938429, -0.2330805882739642896864347},
    {12.0, 0.04768931079683353662381169, -0.2234471044906276123676977},
    {12.25, 0.1009306105105151006700665, -0.2003571987558549947406775},
    {12.5, 0.1468840547004211023064051, -0.1654838046147597184587623},
    {12.75, 0.1828850566401552669357773, -0.1211785508231918661055571},
    {13.0, 0.2069261023770678109966475, -0.0703180521217783711567694},
    {13.25, 0.2177656779210488997483481, -0.01612147423436694617133863},
    {13.5, 0.2149891658804008152585853, 0.03804929208600142316252171},
    {13.75, 0.1990188785029984959797525, 0.08889464674179124845636933},
    {14.0, 0.1710734761104586590630952, 0.1333751546987932531051779},
    {14.25, 0.1330800420016737305534674, 0.1688905534859934510925025},
    {14.5, 0.08754486801037622290590485, 0.1934294635960469600551289},
    {14.75, 0.03739138641994934541832345, 0.2056812714861862930014131},
    {15.0, -0.01422447282678077323386427, 0.2051040386135227611471374},
    {15.25, -0.06411001866964823065291638, 0.1919450094546744620116446},
    {15.5, -0.1092306509000501684828233, 0.1672131803517471432654119},
    {15.75, -0.146892077079711158994811, 0.1326062746576390103652617},
    {16.0, -0.1748990739836291848284025, 0.0903971756613041862386833},
    {16.25, -0.1916815406490356948788965, 0.04328723734053208140137084},
    {16.5, -0.1963806929368610297408274, -0.0057642137356312269888365},
    {16.75, -0.1888907546507676757987483, -0.05372356191889351255759067},
    {17.0, -0.1698542521511835479143917, -0.09766849275778065023559877},
    {17.25, -0.1406118495030858343669043, -0.1349642427561505263711781},
    {17.5, -0.1031103982286859221733449, -0.163419969425754905891869},
    {17.75, -0.05977535599927513187414274, -0.1814160368768587069552762},
    {18.0, -0.01335580572198411088488541, -0.1879948854880695940066254},
    {18.25, 0.03324813997623800014166703, -0.1829104474249414692128746},
    {18.5, 0.07716482142255469901397441, -0.1666336400100160311841817},
    {18.75, 0.1157263926545921818412329, -0.1403141581018422035171913},
    {19.0, 0.1466294396596512042575287, -0.1057014311424092667991019},
    {19.25, 0.1680712628272814108119881, -0.06503005121858529994926169},
    {19.5, 0.1788538270401728929681415, -0.02087707014809752225041786},
    {19.75, 0.1784494457513838612190941, 0.02399981638842301347567851},
    {20.0, 0.1670246643405831547273205, 0.06683312417585004557899297},
    {20.25, 0.1454213938736776199419148, 0.105014968649533603093585},
    {20.5, 0.1150969602536747623087375, 0.136254688193395736606338},
    {20.75, 0.07802721677471045877921061, 0.1587152362197400135612255},
    {21.0, 0.03657907100086274304824456, 0.1711202727639001038427925},
    {21.25, -0.006639431052259144523697962, 0.1728257584640322692052233},
    {21.5, -0.04894204372155805655215949, 0.1638520825458122338712878},
    {21.75, -0.08773017449323322517777969, 0.1448752028865535327493768},
    {22.0, -0.1206514757048671801557235, 0.1171777896438517006584942},
    {22.25, -0.1457415546842982762983272, 0.08256379095229609957394061},
    {22.5, -0.1615403170277827168015637, 0.04324203319071220007444104},
    {22.75, -0.1671760983933836216919825, 0.00168629822459842120209624},
    {23.0, -0.1624127813134865422939712, -0.03951932188370151133182316},
    {23.25, -0.14765740673244553045705, -0.07784018396420769060797747},
    {23.5, -0.1239282315602744425818781, -0.110946143381763321406054},
    {23.75, -0.09278560337771677472570758, -0.1368524575671736695628094},
    {24.0, -0.05623027416685926701477612, -0.1540380651831212212829979},
    {24.25, -0.01657572090851170891112608, -0.1615342291156016678262186},
    {24.5, 0.02369743373406790211193956, -0.1589784118193280787885116},
    {24.75, 0.06209579173200768982039188, -0.146630427281847990162099},
    {25.0, 0.09626678327595811617350334, -0.1253502495802899046518093},
    {25.25, 0.1241420860363390926332991, -0.09653920971948138607860643},
    {25.5, 0.1440621575468478617339658, -0.06204853649148410172107605},
    {25.75, 0.154874419082790728723271, -0.02406115886152861769338828},
    {26.0, 0.1559993155224211296028067, 0.01504573058691581114983237},
    {26.25, 0.1474604998293216774839009, 0.05284874258977166255484287},
    {26.5, 0.1298776261133854109091798, 0.08702780753733148899963689},
    {26.75, 0.1044225430624108092785131, 0.1155079546874122813046765},
    {27.0, 0.07274191800588708758406988, 0.1365847245185076668520415},
    {27.25, 0.03685135456448576425332614, 0.1490256646939978938981236},
    {27.5, -0.000992228905067405163149012, 0.1521418932046569415292693},
    {27.75, -0.03843191856284800825907548, 0.1458256006069688738631464},
    {28.0, -0.07315701054899961390230402, 0.1305514883350937934781771},
    {28.25, -0.103045068376259728919922, 0.1073423697878610348560481},
    {28.5, -0.1262911313804614536750631, 0.07770135790452337075239632},
    {28.75, -0.1415162378584790243623545, 0.04351509297985111958021248},
    {29.0, -0.1478487646829840504606752, 0.006934204559265251248153934},
    {29.25, -0.1449738110244912980309261, -0.02976145284912196739632975},
    {29.5, -0.1331478582983982139967304, -0.06430437809919239678183731},
    {29.75, -0.113178096352735081347263, -0.09457905437881008503211384},
    {30.0, -0.08636798358104021133596232, -0.1187510626166229365202343},
    {30.25, -0.05443267228961778012567482, -0.1353778227258740114417963},
    {30.5, -0.0193897545177621520662359, -0.1434943001509709411149857},
    {30.75, 0.01656774246218141671661855, -0.1426686068775698074565412},
    {31.0, 0.05120814530454224879982049, -0.13302431666631419837109},
    {31.25, 0.08239920414269861673670085, -0.1152283854838353318933199},
    {31.5, 0.1082389267114726217069434, -0.09044569145442246720972393},
    {31.75, 0.1271711733693825697441306, -0.06026325342334068970381811},
    {32.0, 0.1380790097465559237593062, -0.02658902847590528464325714},
    {32.25, 0.1403502372101176522505158, 0.008468285034780069650362988},
    {32.5, 0.1339112772084315200443156, 0.04273089262037961420137229},
    {32.75, 0.1192275634179641089254448, 0.07408680305457614874921627},
    {33.0, 0.09727067223550946279689774, 0.1006196491151174952957285},
    {33.25, 0.06945446912869488207047666, 0.12072547111649002507015},
    {33.5, 0.03754444002435240925251282, 0.1332093657305239753527376},
    {33.75, 0.003545998069070004006950979, 0.1373561939292168550157443},
    {34.0, -0.03042119102179265207193892, 0.1329711810769154311269206},
    {34.25, -0.06225501163217419901422762, 0.1203881260269500737704859},
    {34.5, -0.09000065475310386358168605, 0.1004449470074256599618137},
    {34.75, -0.1119703390402286112216898, 0.0744283055793432722229101},
    {35.0, -0.1268456827563125698068191, 0.04399094217962563996969897},
    {35.25, -0.1337565342877917957238349, 0.01104701217962351106759898},
    {35.5, -0.1323315638913300117472901, -0.02234797020881734264888495},
    {35.75, -0.1227176932999446817010439, -0.05412507027649541458770479},
    {36.0, -0.1055673816686880622107447, -0.08232980948644892939766936},
    {36.25, -0.08199477535639243610274566, -0.1052420946394748706702298},
    {36.5, -0.0535036424176147809573483, -0.1214808570499770247852128},
    {36.75, -0.02189173308477722826391861, -0.1300870511847028122070594},
    {37.0, 0.01086236972489969474099382, -0.1305800387337564550281513},
    {37.25, 0.04272280640862733497517484, -0.1229840579199513541105506},
    {37.5, 0.07172270511060222932324211, -0.1078233440192769592229296},
    {37.75, 0.09608534046441176271492715, -0.08608640940978210747506802},
    {38.0, 0.114332739061150116571047, -0.05916188988776012606928494},
    {38.25, 0.1253751074794760996268649, -0.02875010185151489808027065},
    {38.5, 0.1285756853307894659395276, 0.00324407376596761949307756},
    {38.75, 0.1237871774064113558090716, 0.03483024917944482448124775},
    {39.0, 0.1113576979548671232855007, 0.0640561036886893466397907},
    {39.25, 0.0921060552645091488220383, 0.08912781692342427139840582},
    {39.5, 0.0672680985097538596732556, 0.1085199464011415797973293},
    {39.75, 0.03841762447962931261174576, 0.1210680320637568956532266},
    {40.0, 0.007366890584237289553531736, 0.1260383180375849992056027},
    {40.25, -0.02394699168451800796025107, 0.1231704285936775451381378},
    {40.5, -0.05358267563226294688182981, 0.1126905299405943127052043},
    {40.75, -0.07971471407408945334496075, 0.09529434609857001360007374},
    {41.0, -0.1007457891244797977422082, 0.07210126160497938645093256},
    {41.25, -0.1154041496459499614469815, 0.0445825210642053078572656},
    {41.5, -0.1228203242138017711147244, 0.01446811651145212113785635},
    {41.75, -0.1225784932237972070607191, -0.0163617581231216406965365},
    {42.0, -0.1147394967135828207887864, -0.04599388822188714005456708},
    {42.25, -0.09983422466198295453807372, -0.07260056501978103980671408},
    {42.5, -0.07882797369598458371870766, -0.09455212681048804615432678},
    {42.75, -0.05305814450281610200757535, -0.1105165964868705119095646},
    {43.0, -0.02414928758414548740748253, -0.1195403340493433444549769},
    {43.25, 0.006089118611433696341315409, -0.1211048302570261975602281},
    {43.5, 0.03577573717522485960981134, -0.1151562691098231548017339},
    {43.75, 0.06307423632445680402178941, -0.1021061880310228554313861},
    {44.0, 0.08630669933228657911507945, -0.08280335937602917097505665},
    {44.25, 0.1040565876144493301218205, -0.05847879394590446215385577},
    {44.5, 0.1152549489267310479723452, -0.03066741696224856477881732},
    {44.75, 0.1192446336402706873890879, -0.001111388342462127296976078},
    {45.0, 0.1158186706732563235876744, 0.02834885437642452753373056},
    {45.25, 0.1052305733652978992853263, 0.05588902706329705214527054},
    {45.5, 0.08817609315509209524909281, 0.07981379965306677589822965},
    {45.75, 0.06574770672663233768750123, 0.09866100163938596770493897},
    {46.0, 0.03936480102453884441406073, 0.1112908365551008225895874},
    {46.25, 0.01068400699085269828951396, 0.1169546705710096296122971},
    {46.5, -0.01850466374724187491075187, 0.1153392519145761344283094},
    {46.75, -0.04638937753665855264937938, 0.1065837584723807060393405},
    {47.0, -0.07124878990180619080254616, 0.0912687642400078856094374},
    {47.25, -0.0915581568672354445271216, 0.07037795584771012824701581},
    {47.5, -0.1060827141588935374771122, 0.04523511047496801567612476},
    {47.75, -0.113952613824592734223879, 0.01742036261712526712646627},
    {48.0, -0.1147148783241972523697519, -0.01132895341962469374185423},
    {48.25, -0.1083592772418544342580916, -0.0392266722184624408311803},
    {48.5, -0.09531666074729756956083062, -0.06454862659555296940620914},
    {48.75, -0.07642999516550057816313494, -0.08573906951112081343184338},
    {49.0, -0.05290003332227351506593678, -0.1015061280343105564730009},
    {49.25, -0.02620911155049648402258506, -0.1109004403532512394322165},
    {49.5, 0.001972099362057277619791616, -0.1133721962832653914117619},
    {49.75, 0.02988903184835180210684237, -0.1088031612765535302840723},
    {50.0, 0.05581232766925181500475048, -0.09751182812517513766145895},
    {50.25, 0.07814483604419163420319492, -0.08023151170413844634158908},
    {50.5, 0.09551989154970056708369287, -0.05806287642132068647988378},
    {50.75, 0.1068848318318017668629365, -0.03240396003416672686069253},
    {51.0, 0.1115646582446860682182338, -0.004862134368029079837140291},
    {51.25, 0.10930199624066381196391, 0.02284646091816378016685266},
    {51.5, 0.1002709976667062313157007, 0.04900372738955581878186686},
    {51.75, 0.08506445110609651163705382, 0.07199601979623132359657381},
    {52.0, 0.06465502794967447822296918, 0.09041357753814037781575632},
    {52.25, 0.04033318805983995129594582, 0.1031368556116265740909125},
    {52.5, 0.01362570130150304337834155, 0.1094044746740236236294447},
    {52.75, -0.01380007795326992310884393, 0.1088586721188574414281338},
    {53.0, -0.04024018882987750425549239, 0.1015655475351201245070555},
    {53.25, -0.06405981747086977273291756, 0.08800896819489267512665769},
    {53.5, -0.08379426962089218808424237, 0.06905863531035996080120688},
    {53.75, -0.09823893243107396362814117, 0.04591440832823892923702359},
    {54.0, -0.1065227062157467635659813, 0.02003044394069553484567109},
    {54.25, -0.1081604357202223296784452, -0.0069760608325822952922126},
    {54.5, -0.1030811910957957214095129, -0.03342580139117648016099409},
    {54.75, -0.09163075828484264726096527, -0.05768168140241585555717798},
    {55.0, -0.07454830264823682300672149, -0.07825003830868465937926618},
    {55.25, -0.05291876874633357645857847, -0.0938725256569223178573558},
    {55.5, -0.02810407430115239559969043, -0.1036030058959336271964201},
    {55.75, -0.001657455482125901196287758, -0.1068647604083055678673396},
    {56.0, 0.02477365573419652598463317, -0.1034845628058978914911108},
    {56.25, 0.04955015538897572936179231, -0.09370160899566733416450716},
    {56.5, 0.07114281838573940958096738, -0.078150862756907609840444},
    {56.75, 0.0882265906871381769741332, -0.05782196121619075224441767},
    {57.0, 0.0997618143965065649720137, -0.03399633247860175603399721},
    {57.25, 0.105057411928398992846856, -0.008166514825583737189101295},
    {57.5, 0.1038121944022615595560767, 0.01805724866618377236919524},
    {57.75, 0.09613183077537201677477705, 0.04304730049776341866847142},
    {58.0, 0.08252053218584683794062841, 0.06525950351176902991334103},
    {58.25, 0.06384807592411892845233558, 0.08332856640170820859862151},
    {58.5, 0.04129431799911825368237222, 0.09615188039980943483354486},
    {58.75, 0.01627472824437196684603252, 0.1029567239858952819330513},
    {59.0, -0.00964835781420094642086819, 0.1033467440993969484028868},
    {59.25, -0.03486321140231014030036411, 0.09732492280072892910094127},
    {59.5, -0.05780883147438126811505674, 0.08529170609526627034615642},
    {59.75, -0.07707149998004085214696629, 0.06801851517000274189304787},
    {60.0, -0.09147180408906186953148083, 0.04659838375816631786880901},
    {60.25, -0.1001367734449130829772048, 0.02237687453690972050346918},
    {60.5, -0.1025527247809908365051533, -0.003132364367764196284875819},
    {60.75, -0.0985956195439296037931497, -0.02834210849797266039778384},
    {61.0, -0.08853714630150044775051789, -0.05169023594242043148340446},
    {61.25, -0.07302625082132535575319782, -0.07173644601825711374946289},
    {61.5, -0.05304735880343627548213674, -0.08725103419043277349705267},
    {61.75, -0.02985797504780496863097369, -0.09729025594418471868570101},
    {62.0, -0.004909609587473566646010944, -0.1012536650481202495604141},
    {62.25, 0.02024300172390499499739526, -0.09891994667078893132195659},
    {62.5, 0.04403870948258147505239281, -0.09045911175007760978570924},
    {62.75, 0.06500677215751134053206752, -0.07642039169951299000142844},
    {63.0, 0.08185768644780927319025797, -0.05769668029394361599091461},
    {63.25, 0.09356242141161188120697894, -0.03546781892472901073564735},
    {63.5, 0.09941519189110788463446165, -0.01112632284945246481384689},
    {63.75, 0.09907594585019766414568723, 0.013809780413260795994042},
    {64.0, 0.0925900122160481143309357, 0.03779154935439637491167236},
    {64.25, 0.08038378098932825511174823, 0.05933527282477988303848584},
    {64.5, 0.06323677689948930696782835, 0.07711419701138436716382046},
    {64.75, 0.04223194923041008856187882, 0.09004016834436398044724673},
    {65.0, 0.01868734322767794986516466, 0.09733017222612694251329138},
    {65.25, -0.005926539989970525082673896, 0.09855370251017054239659067},
    {65.5, -0.03007851778769529399696368, 0.0936580998263324248253506},
    {65.75, -0.05227191118516492102032472, 0.08297037269999099888783105},
    {66.0, -0.07113722783672528272404345, 0.067175478088973306433179},
    {66.25, -0.08551660733611019692301164, 0.04727249655450002514626252},
    {66.5, -0.09453482556598131247422134, 0.02451150147635595498776317},
    {66.75, -0.09765250740295603329420671, 0.0003151073851080100486073025},
    {67.0, -0.09469831604918876208446769, -0.02381038314910003163766232},
    {67.25, -0.08587820228106794455748026, -0.04636868849521145801159029},
    {67.5, -0.07176122579142253672506876, -0.06596628696291754465964409},
    {67.75, -0.05324291461266712744420595, -0.08139844166405185677530188},
    {68.0, -0.03148851718745771618962933, -0.09172320431048067162462418},
    {68.25, -0.007859739215081529358378326, -0.09631885543828324705224317},
    {68.5, 0.01617043217167417306333233, -0.09492128159072181043234265},
    {68.75, 0.03910949282406887208801574, -0.08763904604266760642977512},
    {69.0, 0.05953806155105541661214446, -0.07494530013047314848926637},
    {69.25, 0.07619764909771724541513377, -0.05764712054530821075475122},
    {69.5, 0.08806813230646535463430862, -0.03683425478635325502208031},
    {69.75, 0.09443016733178890609348237, -0.01381052597180881570452978},
    {70.0, 0.09490872648301354226674669, 0.009987788784838515161816633},
    {70.25, 0.0894951270293612475625754, 0.03308150032730745016395174},
    {70.5, 0.07854626293837299521695882, 0.05404039094017062506726464},
    {70.75, 0.06276116827349817099211089, 0.07157173523604335001241891},
    {71.0, 0.04313644573252906561476502, 0.0845999828900526711578119},
    {71.25, 0.02090339856421558862063184, 0.0923326947335712960285418},
    {71.5, -0.002549171644835308334536961, 0.09430869296611806822482915},
    {71.75, -0.02576166410314196961156934, 0.09042550275992862692384665},
    {72.0, -0.04729446581174154126394033, 0.08094445627939482665876671},
    {72.25, -0.06581718278143268119161532, 0.06647322034409188890694302},
    {72.5, -0.08019078786203466094226731, 0.04792690915924440181378531},
    {72.75, -0.08953761583660144327018178, 0.02647026692934970804658094},
    {73.0, -0.09329490734068471385581151, 0.003444570022622522340601612},
    {73.25, -0.0912486378715061515415027, -0.01971616696993728633755272},
    {73.5, -0.08354560162634329070971744, -0.04157444956890405255157652},
    {73.75, -0.07068307503010654814659263, -0.06077847350074759649391163},
    {74.0, -0.05347677717910857574696039, -0.07614567822515259447442008},
    {74.25, -0.0330091876186871272023845, -0.08673552243202774542263306},
    {74.5, -0.01056149280236191993936859, -0.09190700557990992022465808},
    {74.75, 0.01246656335972029426630856, -0.09135742020360680953251637},
    {75.0, 0.03464391380509705613738426, -0.08513999504482910394102953},
    {75.25, 0.05459705387881948437294636, -0.07365940550376444751116205},
    {75.5, 0.07109506027151367850535314, -0.05764550342032911380653606},
    {75.75, 0.08312548353959657326197846, -0.03810696733052530504079443},
    {76.0, 0.08995643772497043618219706, -0.01626781358073412725324277},
    {76.25, 0.09118108190813592510020679, 0.006509238420378520319051263},
    {76.5, 0.08674179289234569252238471, 0.02880775162089463414483263},
    {76.75, 0.07693259640717201574415445, 0.04924561017849690113608983},
    {77.0, 0.06237977708964741421866231, 0.06656064247057205993665779},
    {77.25, 0.04400194091077374621933657, 0.07968852654413077749407643},
    {77.5, 0.02295207376455302480006588, 0.08782817196233676344174523},
    {77.75, 0.0005452481632534999193515573, 0.09049056401363603221131473},
    {78.0, -0.0218234917935592097925236, 0.08752809455105695604564032},
    {78.25, -0.04276594249266218179608825, 0.07914262317723485749340382},
    {78.5, -0.06098685037974146495744661, 0.06587183692049402503627369},
    {78.75, -0.07536398030258264472016003, 0.04855482353014131465373126},
    {79.0, -0.08501719554953484564005465, 0.02827905948966422747905508},
    {79.25, -0.0893622996681859617000193, 0.006312159284745723129111506},
    {79.5, -0.08814634862910851639729438, -0.01597733319087644451613541},
    {79.75, -0.08146230145181095082652018, -0.03720516420977475755999912},
    {80.0, -0.06974216551221002283974755, -0.05605729667571257750955316},
    {80.25, -0.05372912913870488743092759, -0.07137121215142033469211744},
    {80.5, -0.0344304757700588709114709, -0.08220756051450883175575649},
    {80.75, -0.01305426029611125273748781, -0.08790774349602766822976628},
    {81.0, 0.009066273966131119135781337, -0.0881339043046677067652539},
    {81.25, 0.03055581117828652743219503, -0.08288889748572821108866479},
    {81.5, 0.05008243266675789668945801, -0.07251506212887258867357761},
    {81.75, 0.06644013123637151104447622, -0.05767193964176359507692274},
    {82.0, 0.07862326054974704868875428, -0.03929438261949019054111071},
    {82.25, 0.08588832586116151925465064, -0.01853371297615877672438566},
    {82.5, 0.08779932155396742912065529, 0.003314369368606637371611513},
    {82.75, 0.08425385298649750033722594, 0.02489061550066164407372588},
    {83.0, 0.07548848040193136388208198, 0.04485675423342790907570069},
    {83.25, 0.06206301616910741873503985, 0.06197846243252599213617975},
    {83.5, 0.04482481290320406037933884, 0.07520163716129763212690061},
    {83.75, 0.02485531802665381731141311, 0.08371725869954646793196159},
    {84.0, 0.00340226350586012482152638, 0.08701085516537904043747467},
    {84.25, -0.01819825951900080846733478, 0.08489354637929283646728293},
    {84.5, -0.03860497670594064779862075, 0.07751279607089761445550056},
    {84.75, -0.05655468132091456573037126, 0.06534226560008351294959436},
    {85.0, -0.07094039479627329545964798, 0.04915146033489106198286612},
    {85.25, -0.08087960294609987230705935, 0.02995711111630013031512159},
    {85.5, -0.08576836359779746189665997, 0.008959360394499082399921677},
    {85.75, -0.08531797016769853229600252, -0.01253324388677701933750096},
    {86.0, -0.07957194751921752067419062, -0.03318526107069188041797453},
    {86.25, -0.06890238299268933191854701, -0.05171730170800844270039649},
    {86.5, -0.0539858803272974862403399, -0.06698525306069462276273715},
    {86.75, -0.03576068745560252029463649, -0.07805088218016809857894096},
    {87.0, -0.0153677125565403249417115, -0.08423946153477249252999445},
    {87.25, 0.005920865562717758948376271, -0.08518087966208307470636307},
    {87.5, 0.02678092773299819842599645, -0.08083173387597459898067729},
    {87.75, 0.04591874049769351108777713, -0.07147708888988716069796826},
    {88.0, 0.06215116143661287971069678, -0.05771185029271056708415109},
    {88.25, 0.07447875333090343266275566, -0.0404029664571659715737643},
    {88.5, 0.08214729081420695758317051, -0.02063485824705617961557183},
    {88.75, 0.08469387607710500515612443, 0.0003584904949463157253240371},
    {89.0, 0.08197484573596843197712737, 0.02127053092509235215935341},
    {89.25, 0.0741737886009946914859541, 0.04080343306779721795126375},
    {89.5, 0.06178923273698054451390288, 0.0577486006108665862147674},
    {89.75, 0.04560282279263673279461771, 0.07106142351462514703545526},
    {90.0, 0.02663001669996951132257907, 0.07992564670886808496515212},
    {90.25, 0.006056409729942517023184399, 0.0838033901765561399047591},
    {90.5, -0.0148363230270902860737808, 0.08246775684660841818341934},
    {90.75, -0.03475024164119682713675284, 0.07601605337693759793433156},
    {91.0, -0.052451745233414315012607, 0.06486285706602718520071459},
    {91.25, -0.06684796097476858239165023, 0.04971341452620283793186968},
    {91.5, -0.07705418965772834193966824, 0.03151907658644975936149786},
    {91.75, -0.08244824716356875917630276, 0.01141758366316697850590077},
    {92.0, -0.08270836557756638484827664, -0.009338051990873392270207844},
    {92.25, -0.07783234686168974499168985, -0.02945762351000529738911892},
    {92.5, -0.06813683148442760958027116, -0.04769390276471575552210273},
    {92.75, -0.05423678130288993744139068, -0.0629199296144572390653278},
    {93.0, -0.0370065033827710933336341, -0.07419862922226043144977739},
    {93.25, -0.0175246832134387449601467, -0.08084045845891703366400928},
    {93.5, 0.002993118670219192021262923, -0.08244553666521865060874478},
    {93.75, 0.02327028403003241541921414, -0.07892768815831083043262721},
    {94.0, 0.04204854102209948103399741, -0.07051895298225975121590012},
    {94.25, 0.05816601789677653307660519, -0.05775433805783418315895774},
    {94.5, 0.07062910607989263133120178, -0.04143780744618106163733932},
    {94.75, 0.07867368939381344762350222, -0.02259167179326619799579332},
    {95.0, 0.08181196778338414374280813, -0.002392561299726905562658035},
    {95.25, 0.07986200775495218270772605, 0.01790200941166105551819145},
    {95.5, 0.07295823113238305607359403, 0.03703190297081175037248386},
    {95.75, 0.0615422412569414462454197, 0.05381257846769701858899953},
    {96.0, 0.04633460745193362295625058, 0.06720841455530160930744904},
    {96.25, 0.02828940855527568785352869, 0.0763965992632393335322829},
    {96.5, 0.008534401495985850787461294, 0.0808176464546253152213202},
    {96.75, -0.01169943453172942784690729, 0.08020943887203739693574927},
    {97.0, -0.03115457817277728712632053, 0.0746227278888986721769587},
    {97.25, -0.0486250952996978478481404, 0.06441717601275429431119943},
    {97.5, -0.06303136507066916963796377, 0.05023823784398897978721121},
    {97.75, -0.07348677372253370189650714, 0.03297636339700285540591292},
    {98.0, -0.0793522574946710218321374, 0.01371110078339769567073877},
    {98.25, -0.08027534066360197700174353, -0.006356394331157330067699345},
    {98.5, -0.07621128541917213723540341, -0.02597822465914419040955171},
    {98.75, -0.06742508647635157953796142, -0.04393732785064595802978946},
    {99.0, -0.05447423527049907343990908, -0.05912294255307406703713513},
    {99.25, -0.03817337218108898697987177, -0.07059928600457309547628734},
    {99.5, -0.01954306640744078355662029, -0.0776631982430769354397903},
    {99.75, 0.0002540575025709019070164627, -0.07988720335389257488932207},
    {100.0, 0.01998585030422312242422839, -0.07714535201411215803268549},
};
