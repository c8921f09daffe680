/* io: inputs=1 outputs=1 */
#include <stdio.h>
int main()
{
    float celsius, fahrenheit;
    scanf("%f", &celsius);
    if (celsius < -273.15)
        printf("below absolute zero\n");
    fahrenheit = celsius * 9 / 5 + 32;
    printf("%f\n", fahrenheit);
    return 0;
}
