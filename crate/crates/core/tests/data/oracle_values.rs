// Generated by oracles.py; do not edit.
pub const VALUES_HEAD: [f64; 5] = [5000.0, 6315.0, 7800.0, 6655.0, 7425.0];
pub const MOMENTS: [f64; 7] = [5000.0, 11125.0, 8277.5, 8339.351851851852, 1302.1764836877664, -0.06450505335694595, -0.34227722983549436];
pub const HIST6: [f64; 6] = [3.0, 16.0, 26.0, 33.0, 21.0, 9.0];
pub const GEV_RESTRICTED: [f64; 4] = [-0.31710516745463413, 1315.873175966993, 7903.297716472373, -926.6465729919846];
pub const DFT_RE: [f64; 5] = [900650.0, -4373.407661673184, -4329.841298590873, 9455.436903497044, 1280.0000000000023];
pub const DFT_IM: [f64; 5] = [0.0, 56780.10608294398, 7644.356834624248, -13080.045553757718, 1.8189894035458565e-12];
pub const ACF10: [f64; 11] = [1.0, 0.3720744565470899, 0.5678254507122672, 0.43184382983975245, 0.42246119574905316, 0.5650203046109308, 0.3119452396337878, 0.8113645790580333, 0.28104618854041097, 0.46014880931344954, 0.33774834424944283];
pub const AR13_BETA: [f64; 14] = [362.33001566360537, -0.07615704237449278, -0.020934948840800407, -0.220802120006131, 0.018547370426043357, 0.04276389475208136, -0.02690483742032728, 0.9072839022025933, 0.09560812058686013, 0.05023467014266342, 0.20901678548583602, 0.007835380471896315, -0.029309903014938347, 0.032174572211248476];
pub const AR13_RMSE: [f64; 1] = [371.5712751159372];
pub const COSINE_B_SSE: [f64; 2] = [2.6918189047712255, 36136145.942764364];
pub const SVD_FRACTIONS: [f64; 7] = [0.9987828375335124, 0.0004102117366130496, 0.0002826130726063408, 0.00022635220732135152, 0.0001568068684399954, 9.530780157916688e-05, 4.587077992772567e-05];
pub const ARX_A1_A2_B: [f64; 3] = [-0.4032032626907986, -0.694907719283989, -198.49349107573588];
pub const ARMAX_Y: [f64; 600] = [0.0012301533574825742, 2.2999756908659523, 5.225099743489245, 7.674817727018195, 10.748963166838436, 13.74089948563427, 17.758232038611723, 23.27103201263369, 12.45485237952835, 6.001347517949799, 7.351490125121431, 11.763448399717038, 15.835940067067861, 18.260572015188263, 21.38771615535283, 11.864117755647026, 5.774834152815882, 6.096775360605873, 8.418829341583415, 11.781915697123559, 15.027833416251731, 19.68853176413495, 9.446069441357047, 5.494221078231457, 7.672575588820373, 11.380470627665666, 12.702235170162831, 15.799850196389722, 20.675484980061537, 11.339229556601857, 5.183628566844736, 5.752523646550383, 9.245168086091072, 13.196351251696312, 18.80614086141541, 22.26123904053252, 11.23997967695815, 7.163121183473351, 7.820032288902349, 10.91425301396526, 15.050328714014503, 18.955314057170504, 21.16357957478373, 10.493202833246068, 7.452485298883236, 7.3692353032488604, 11.171568938942874, 15.692201403621171, 18.58727827055554, 23.757755070308626, 14.099623718695751, 6.813838199884387, 6.8631788441208545, 11.361635741674409, 15.486239384297797, 19.626813899298703, 22.885487249448328, 12.446570202583816, 8.596266287650508, 8.568192517730347, 11.354535963095454, 14.717030941928629, 18.50125675314855, 21.021060700143597, 9.858205661813718, 5.282794645653945, 8.018321138008233, 13.259161309968446, 15.486393568876819, 17.31595039635165, 21.62133800021423, 9.775954305713082, 4.281167204762838, 6.330954590064051, 12.160439520104646, 17.22228268553546, 19.849829847306452, 21.965980109087937, 10.811996337833564, 7.517453021131541, 8.52945936272181, 11.139294648012903, 15.208801828202754, 18.917687349146725, 22.06325963784718, 10.26143747854162, 5.287062234256565, 6.671760034655776, 11.934338860942608, 16.94579092281166, 20.017698569569006, 23.280184535242437, 11.89205386482545, 7.3953739495884685, 8.474264579487144, 12.186706487686354, 14.559630673063062, 18.128759857049594, 20.415797681801973, 7.913116045784715, 3.5461016354230246, 5.523319413413701, 10.4088530736364, 17.45102570627004, 20.45502427821709, 21.826176566667502, 10.96052759584422, 6.786256114011265, 7.900447399897098, 11.106524460520486, 15.703916019352128, 20.001937538589296, 22.034666542023018, 10.727760766050633, 6.033337472440914, 6.434080447669902, 10.491826025968475, 14.254258689140306, 19.083074125336914, 23.180565333145974, 12.25812922563128, 6.163458710200918, 6.8914282159740905, 8.85697496508614, 12.005393348170987, 17.342117826864897, 20.020760904338097, 10.539214681982182, 4.911923561540246, 6.897611113042415, 10.613380323703783, 15.429298242804517, 19.57745052226374, 21.176156207539776, 11.424618393512976, 8.560906449945822, 9.362498147473737, 11.605079363922675, 14.821114514019296, 17.53255372646004, 22.26383516371758, 11.74833312511112, 6.327885656939404, 6.633292200861704, 9.771006528127728, 13.007791085165046, 18.596452598527407, 22.90505349436318, 12.928028166358832, 7.575499445347444, 7.270620344999109, 10.242825646846565, 14.000666164604318, 18.135701248377032, 21.709204316102365, 10.948353888173433, 4.728628099170954, 5.289230280592399, 11.55913172627323, 15.868022782913913, 17.886400250369526, 21.473924411164568, 12.849277329211379, 6.523666092635319, 6.554212620495161, 9.912333060534618, 12.622716816320372, 17.621682397212734, 22.318992840212076, 11.929123501555367, 5.969940798162257, 7.349999352604963, 10.858627767641972, 14.6865546417725, 17.474785155954887, 19.888153088137635, 11.287025572908346, 6.821692763699012, 7.92444901817815, 11.473212565942035, 14.844376359260458, 17.927564250925776, 22.214561482014073, 11.693389471067611, 6.300930696252896, 7.403524621464178, 12.36732557675772, 17.090804724495733, 20.435822376927145, 22.432801194995093, 9.765118964263863, 5.769253583292015, 8.854787464037432, 12.404892216329067, 16.157578318944136, 20.211765138627477, 24.0393050936068, 13.635087282751044, 7.286127089566722, 8.977384719590088, 11.288601548620887, 15.34076983893388, 19.785362903464367, 23.874255719428646, 14.595936803470849, 10.218759734414125, 8.660669762116438, 9.005907567243451, 13.812831014869436, 17.79826030321857, 21.497979623959374, 12.1739010352781, 5.696838335991474, 4.21582339975555, 8.80543321126847, 14.588200744558161, 18.7637850889446, 22.280844439672578, 10.770647944155431, 4.148519228339723, 5.5629293343835835, 9.469683123560685, 12.537059208428829, 17.476587442773994, 22.119414424113767, 12.158300251177405, 6.044413739110879, 6.141211424824014, 9.213577563117404, 13.013645174959523, 17.806222763278416, 21.376193173739956, 11.307347793874586, 6.991352482523086, 10.094405287786323, 12.07564802505241, 15.557294516962502, 19.184920094412618, 22.349668238368704, 10.11734121017969, 4.560331736946774, 7.271850538486217, 11.665844509062651, 15.593199619344688, 18.764455937358246, 23.17831671329208, 12.594454172254617, 4.712004461394892, 4.736073022918696, 7.653617294202199, 9.605998713608946, 14.402185053354001, 21.84162499948441, 12.805081835191528, 6.161026356265292, 5.725881295556455, 10.957656789049857, 16.03928972981709, 19.543092371001727, 22.483735384424385, 11.59863830247441, 7.283201656165704, 8.924922889338134, 12.335045021336663, 14.659455957354156, 18.422625992018887, 21.641880831711894, 12.12075014532684, 6.110561369489788, 6.596145487663264, 10.673168341898494, 13.7570830424458, 19.311729580686603, 24.984816564724944, 13.249122967992387, 7.538798128771332, 8.560818819560343, 9.166642630504766, 12.992796045330278, 18.001164227775003, 22.260819049140178, 10.712670605491741, 5.275341539315732, 6.736673220620631, 12.10372633636863, 16.724565904972994, 19.742210069663813, 24.027160846633564, 12.524194563448098, 6.097555091961303, 5.181167009197949, 10.731593028874496, 16.99469712219298, 21.353080659330367, 24.44854663541124, 12.776219815623097, 7.0355709365394, 7.500287584204644, 10.788655301385038, 14.94599910541461, 20.343419359221016, 24.377271500883275, 12.721494063650127, 6.154666037266481, 6.281745502040847, 11.886819709979038, 17.023512034275353, 20.1069687585709, 22.340317229459004, 10.135270437399605, 5.102615894397854, 7.881428860641034, 11.665260104455639, 15.038612808809619, 18.37818427975544, 22.040368633513918, 9.99941119261092, 4.718970285400432, 5.882945073777967, 11.128799812487669, 15.083926209197193, 19.093403039695534, 24.194512733624922, 12.994205752044927, 6.230606147865856, 7.090324296587234, 11.082617224420577, 14.237077516951574, 18.389195942064326, 24.38598588160904, 13.501846766676998, 6.917789889513437, 6.324222078377712, 10.312090911382853, 13.803069287121161, 16.613701875761592, 22.044502130135918, 11.510374752272103, 7.216500770909559, 9.984726543606657, 13.416605430971947, 16.71013993570336, 21.516370380054735, 24.151966216301165, 11.516208496001848, 4.488898470781286, 5.890512037701571, 12.13235457152153, 17.652563401140792, 19.606814037522557, 21.001363861885597, 9.833134126752844, 5.790207294433544, 7.419093357204011, 11.425743930037305, 15.754148642804262, 18.98726256421483, 22.081844433693725, 11.642176947948126, 6.5676045293833685, 8.082060311621177, 13.607999400421658, 17.888710172030788, 20.304225683451023, 20.940998970865962, 10.217263882499807, 4.150662957965564, 4.259239547416373, 10.016436754863026, 16.206104904558707, 19.852930617468402, 20.900550684077526, 9.5143913276011, 4.70124693477279, 7.283215314187254, 13.942146632437408, 18.028667617550663, 19.33623231119266, 20.513729881689393, 9.916676573885544, 5.648029062172553, 6.183245685593515, 10.236089170802794, 13.800632938328985, 18.884903792041786, 24.078309202039147, 14.179816270426816, 7.6520779573583, 8.080183895404293, 11.391433465878793, 14.77718343695619, 18.0933528872949, 20.465201509094726, 8.696700522889074, 5.341749324432495, 7.59220000251258, 11.626900826180863, 16.545980824111172, 18.269759989596103, 20.1752767571131, 10.312896870287354, 6.614911494801395, 7.686130987088498, 12.167045745830231, 16.385067881989215, 18.268407416731478, 20.267914242119254, 10.940232612023623, 7.296576599444231, 6.4763707808376365, 11.014594956873504, 16.450594770595426, 21.249991671116607, 23.613512362554395, 11.468922509546957, 4.913911459933046, 8.740909110281796, 13.101080776828075, 17.62981814595957, 19.945395557655626, 22.346197917179655, 9.812823629139828, 4.367046450653166, 7.488271193457255, 10.761311573729234, 15.5306627242509, 19.932264153627, 21.94417014868115, 10.260871617063914, 5.107984355226436, 6.779470681098411, 10.490133836493666, 13.896440678494743, 17.60433477696148, 20.63458791086296, 9.159603323038784, 4.804857300086087, 7.91459734799552, 10.611564933884555, 14.17577896014864, 17.734601455096563, 20.568477165972997, 11.256745486425231, 6.463557230655719, 8.917819048536996, 11.877461292070612, 15.41747921350224, 18.80231306058035, 21.352956981898515, 11.337377895950246, 6.611922785146738, 8.240895643381716, 11.816145554068143, 14.336775345576307, 17.70244035122267, 21.765236613858914, 12.497898919758468, 6.622808203300599, 7.072267681827288, 9.181188296899292, 14.057001010025417, 17.777077196132073, 19.615893404734294, 9.43235996090598, 6.818235520549682, 7.1222963554018754, 9.211916344458011, 12.92420141038578, 16.485330974576552, 21.233987532466557, 10.787730034853972, 5.181378799941075, 7.245980777092082, 10.789120234771275, 15.154850230837596, 18.13681295877855, 20.250425146131505, 8.202587801046153, 5.99849072263675, 8.382798956006514, 11.945810984172589, 15.557450637500821, 19.092850139080916, 22.457891138125664, 13.584256286011666, 7.383335768705799, 5.740117461540112, 8.332458812259281, 12.111958917895258, 17.813762036863825, 23.385028469069777, 11.83510041273388, 4.649092559303248, 5.5114644893088816, 11.626265398344636, 13.610346474497245, 17.239753806925965, 20.7566784694139, 11.616121375824985, 6.156560049351967, 6.654126350879641, 9.140718369131491, 12.573836260549044, 18.711094105350007, 24.0868035622087, 12.636426638460566, 5.733655639570074, 4.671031971456416, 8.504708488454124, 13.980252761434501, 18.590794300300868, 22.23101235678366, 10.461122155592628, 5.315473085742457, 7.031876486645594, 12.431123960828, 18.43525734864131, 21.184633971842338, 22.202627351434135, 10.713145106259695, 5.353747466309768, 6.084137132685897, 10.224109108128943, 13.850873546419013, 18.45448728491971, 22.441044812945954, 11.98217151796995, 6.618157234966089, 6.774029575744981, 9.501924959803953, 13.729889232509294, 17.693877808387157, 21.884746036768885, 11.68120089047009, 5.267691897726491, 6.346573560801136, 9.438393859565966, 13.240099811203768, 17.515436455383508, 19.6682271893909, 9.559247159253298, 5.989489186532127, 7.584213226529678, 10.865103148769917, 14.458888674859237, 17.376331642507246, 20.873705093359266, 10.388464776107723, 5.928978518274236, 6.312232223273098, 10.355479103502214, 15.188295874528835, 18.9576064292292, 21.841074726673977, 11.689781513394141, 5.20198821289587, 6.577849280486268, 11.333530727161007, 15.865139859210116, 19.749040879540384, 22.176077186262425, 10.834920314910804, 6.599011059589771, 8.47788514934135, 12.14589734076275, 14.160326235646812, 17.99917529007089, 23.35206576485956, 13.888864290741658, 8.30065206745933, 6.738490998230713, 10.702437558232905, 15.30352762426504, 16.450207560157573, 20.17361855512195, 9.472840799205002, 3.7556714750717344, 5.205299600750163, 11.390653086369094, 15.931523048646184, 19.40343665797925, 24.312121983905225, 14.999802806903967, 8.671715776596287, 7.920206516185521, 9.6603017114783, 13.013333395832465, 18.023514813143954, 22.777316309574633, 12.330217359013806, 7.881564103526866, 7.888447640305747, 10.791732038081339, 15.606162075209081, 20.081993939135025, 24.232568086662784, 13.348540781228696, 7.0120164585138545, 7.775932956886237, 10.405438190149823];
pub const ARMAX_A1_A2_B_C_SSE: [f64; 5] = [-0.6080458470125443, 0.21624558112007997, 1.9843531827809804, 0.38785073999926994, 508.4818905882022];
pub const PC_COUNTS: [f64; 64] = [1.0, 3.0, 6.0, 8.0, 10.0, 12.0, 15.0, 22.0, 23.0, 24.0, 27.0, 31.0, 36.0, 43.0, 55.0, 64.0, 71.0, 83.0, 91.0, 126.0, 152.0, 172.0, 199.0, 245.0, 278.0, 309.0, 355.0, 409.0, 459.0, 523.0, 596.0, 693.0, 778.0, 900.0, 1004.0, 1128.0, 1276.0, 1426.0, 1593.0, 1766.0, 1957.0, 2149.0, 2371.0, 2578.0, 2791.0, 3005.0, 3241.0, 3499.0, 3702.0, 3945.0, 4164.0, 4371.0, 4589.0, 4801.0, 5000.0, 5175.0, 5332.0, 5478.0, 5605.0, 5689.0, 5739.0, 5767.0, 5775.0, 5778.0];
